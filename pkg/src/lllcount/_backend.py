"""Pick the compiled recurrence kernel if it was built, else the pure-Python one."""

try:
    from ._kernels import sec_log_table
    BACKEND = "cython"
except ImportError:  # extension not built
    from ._kernels_py import sec_log_table
    BACKEND = "python"

__all__ = ["sec_log_table", "BACKEND"]
