import logging
import logging.config
from pathlib import Path
from typing import Any, Dict

# Логгеры пакетов, которые не передают записи корневому логгеру
PACKAGE_LOGGERS = ("src.algebra", "src.combinatorics", "src.verify", "src.cli")

_ROTATION = {"maxBytes": 10485760, "backupCount": 5, "encoding": "utf8"}  # 10MB


def _file_handler(path: Path, level: str) -> Dict[str, Any]:
    return {
        "class": "logging.handlers.RotatingFileHandler",
        "level": level,
        "formatter": "detailed",
        "filename": str(path),
        **_ROTATION,
    }


def setup_logging(log_level: str = "INFO", log_dir: str = "var/log", console_level: str = "DEBUG") -> None:
    """
    Настройка логирования: цветная консоль в stderr, app.log и error.log с ротацией.

    Args:
        log_level: Уровень логгеров (DEBUG, INFO, WARNING, ERROR, CRITICAL)
        log_dir: Директория для файлов логов
        console_level: Минимальный уровень сообщений в консоли;
                       командная строка поднимает его до WARNING без --verbose
    """
    log_path = Path(log_dir)
    log_path.mkdir(parents=True, exist_ok=True)

    handlers = ["console", "file_info", "file_error"]
    logging_config: Dict[str, Any] = {
        "version": 1,
        "disable_existing_loggers": False,
        "formatters": {
            "colored": {
                "()": "colorlog.ColoredFormatter",
                "format": "%(log_color)s%(asctime)s - %(name)s - %(levelname)s%(reset)s - %(message)s",
                "datefmt": "%Y-%m-%d %H:%M:%S",
                "log_colors": {
                    "DEBUG": "cyan",
                    "INFO": "green",
                    "WARNING": "yellow",
                    "ERROR": "red",
                    "CRITICAL": "bold_red",
                },
            },
            "detailed": {
                "format": "%(asctime)s - %(name)s - %(levelname)s - %(module)s - %(funcName)s:%(lineno)d - %(message)s",
                "datefmt": "%Y-%m-%d %H:%M:%S",
            },
        },
        "handlers": {
            "console": {
                "class": "logging.StreamHandler",
                "level": console_level,
                "formatter": "colored",
                "stream": "ext://sys.stderr",
            },
            "file_info": _file_handler(log_path / "app.log", "INFO"),
            "file_error": _file_handler(log_path / "error.log", "ERROR"),
        },
        "root": {"level": log_level, "handlers": handlers},
        "loggers": {
            name: {"level": log_level, "handlers": handlers, "propagate": False}
            for name in PACKAGE_LOGGERS
        },
    }

    logging.config.dictConfig(logging_config)
    logging.getLogger(__name__).debug(f"Logging initialized: level {log_level}, files in {log_path.absolute()}")
