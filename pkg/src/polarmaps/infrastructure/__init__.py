from .bootstrap import BatchSink, PolarMapsApplication, write_atomic

__all__ = ["BatchSink", "PolarMapsApplication", "write_atomic"]
