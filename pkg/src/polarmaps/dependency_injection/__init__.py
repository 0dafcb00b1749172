from .build import build_container

__all__ = ["build_container"]
