from kitstructlog import InitLoggers, LoggerReg

from src.config.configuration import Configuration


class Loggers(InitLoggers):
    main = LoggerReg(name="MAIN", level=LoggerReg.Level.INFO)
    engine = LoggerReg(name="ENGINE", level=LoggerReg.Level.INFO)
    geometry = LoggerReg(name="GEOMETRY", level=LoggerReg.Level.INFO)
    jobs = LoggerReg(name="JOBS", level=LoggerReg.Level.INFO)


__all__ = ["Configuration", "Loggers"]
