"""Tools"""
from .config import Config
from .csvout import emit_csv, format_value
from .report import REPORT_COLUMNS, BoundReport
from .store import CalibrationStore
from .tasks import Tasks, map_ordered
