"""
設定：環境變數與預設參數
"""
import os
import logging
from dotenv import load_dotenv

# 載入環境變數
load_dotenv()

logger = logging.getLogger(__name__)

SCHEMA_VERSION = "1"
APP_VERSION = "1.0.0"

# 截斷界限（生成元次數 / Betti 次數）
DEFAULT_QMAX = 6
DEFAULT_JMAX = 8

# 資源保護
DEFAULT_MAX_N = 6
CORPUS_MAX_N = 7
ENUMERATION_MAX_N = 8

LOG_FORMAT = '%(asctime)s - %(name)s - %(levelname)s - %(message)s'


def get_thread_count() -> int:
    """Worker cap for corpus sweeps (EDGERING_THREADS)."""
    raw = os.getenv('EDGERING_THREADS')
    if raw is None or raw.strip() == '':
        return os.cpu_count() or 1
    try:
        value = int(raw)
    except ValueError:
        logger.warning(f"EDGERING_THREADS={raw!r} is not an integer, using 1")
        return 1
    if value < 1:
        logger.warning(f"EDGERING_THREADS={value} < 1, using 1")
        return 1
    return value


def get_database_url() -> str:
    """Get database URL from environment variable"""
    return os.getenv('EDGERING_DATABASE_URL', 'sqlite:///edgering.db')


def get_log_level() -> int:
    """日誌等級（EDGERING_LOG_LEVEL，預設 INFO）"""
    name = os.getenv('EDGERING_LOG_LEVEL', 'INFO').upper()
    level = logging.getLevelName(name)
    return level if isinstance(level, int) else logging.INFO


def configure_logging(level: int | None = None):
    """設定日誌（僅供進入點呼叫）"""
    logging.basicConfig(
        level=level if level is not None else get_log_level(),
        format=LOG_FORMAT
    )
