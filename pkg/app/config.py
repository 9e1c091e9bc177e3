import os

from dotenv import load_dotenv

load_dotenv()

DATA_DIR = os.getenv("DATA_DIR", "./data")
LOG_LEVEL = os.getenv("LOG_LEVEL", "INFO").upper()
LOG_TO_FILE = os.getenv("LOG_TO_FILE", "true").strip().lower() in (
    "1",
    "true",
    "yes",
    "on",
)
# Логгер lark шумит на DEBUG при построении LALR-таблиц.
LARK_LOG_LEVEL = os.getenv("LARK_LOG_LEVEL", "WARNING").upper()

DEFAULT_SEED = int(os.getenv("DEFAULT_SEED", "20260101"))
DEFAULT_TRIALS = int(os.getenv("DEFAULT_TRIALS", "1"))
SUPPORTED_REPORT_FORMATS = ["text", "json"]
DEFAULT_REPORT_FORMAT = os.getenv("DEFAULT_REPORT_FORMAT", "text").strip().lower()
if DEFAULT_REPORT_FORMAT not in SUPPORTED_REPORT_FORMATS:
    DEFAULT_REPORT_FORMAT = "text"

TRIAL_WORKERS = int(os.getenv("TRIAL_WORKERS", "1"))
TRIAL_CHUNK_SIZE = int(os.getenv("TRIAL_CHUNK_SIZE", "10000"))
AXIOM_CHECK_SAMPLES = int(os.getenv("AXIOM_CHECK_SAMPLES", "20"))
