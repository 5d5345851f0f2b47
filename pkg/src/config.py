"""Configuration module for the fsalg synchronizer"""
import os
from dotenv import load_dotenv

# Load environment variables
load_dotenv()

# Hashing Configuration
HASH_ALGORITHM = "sha256"
HASH_THREADS = int(os.getenv("FSALG_HASH_THREADS", str(min(8, os.cpu_count() or 1))))
HASH_CHUNK_SIZE = int(os.getenv("FSALG_HASH_CHUNK_SIZE", "65536"))

# Ordering Configuration
ORDER_LIMIT = int(os.getenv("FSALG_ORDER_LIMIT", "1000"))

# Verification space: chain /a, /a/x, /a/x/y plus root /b; alphabet {b, d, f1, f2}
VERIFY_CHAIN = int(os.getenv("FSALG_VERIFY_CHAIN", "3"))
VERIFY_ROOTS = int(os.getenv("FSALG_VERIFY_ROOTS", "1"))
VERIFY_FILE_VALUES = int(os.getenv("FSALG_VERIFY_FILE_VALUES", "2"))

# File format versions
SNAPSHOT_HEADER = "FSSNAP 1"
SCRIPT_HEADER = "FSCMDS 1"
