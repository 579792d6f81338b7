"""
Init file for truncations module
"""
from .svd_truncation import SvdTruncation, svd_truncate
from .zmt_truncation import ZmtTruncation
