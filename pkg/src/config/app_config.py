from dotenv import load_dotenv
from pydantic import field_validator
from pydantic_settings import BaseSettings

from src.utils.string_utils import format_fraction, parse_fraction

load_dotenv()


class Settings(BaseSettings):
    """
    Общие настройки из переменных окружения и .env.
    Параметры запуска наборов лежат отдельно, в verify_config.
    """

    class Config:
        env_file = ".env"
        case_sensitive = True
        extra = 'ignore'

    PROJECT_NAME: str = "QuantumBorelVerifier"
    VERSION: str = "0.1.0"

    # Логирование
    LOG_LEVEL: str = "INFO"
    LOG_DIR: str = "var/log"

    # Параметры алгебры по умолчанию
    DEFAULT_Q: str = "2"
    DEFAULT_SEED: int = 0
    MAX_DEGREE: int = 12  # бюджет суммарной степени для редукции

    @field_validator('LOG_LEVEL')
    @classmethod
    def validate_log_level(cls, v: str) -> str:
        level = v.upper()
        if level not in ("DEBUG", "INFO", "WARNING", "ERROR", "CRITICAL"):
            raise ValueError(f"Неизвестный уровень логирования {v!r}")
        return level

    @field_validator('DEFAULT_Q')
    @classmethod
    def validate_default_q(cls, v: str) -> str:
        """q хранится строкой "num/den"."""
        return format_fraction(parse_fraction(v))


settings = Settings()
