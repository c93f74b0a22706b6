from dotenv import load_dotenv
from pydantic_settings import BaseSettings

load_dotenv()


class VerifySettings(BaseSettings):
    """Настройки запуска проверочных наборов."""

    class Config:
        env_file = ".env"
        case_sensitive = True
        extra = 'ignore'

    # Параллелизм
    JOBS: int = 1

    # Политика выборки для больших рангов
    SAMPLE_EXHAUSTIVE_LIMIT: int = 50000
    SAMPLE_SIZE: int = 5000

    # Количество независимых специализаций параметров
    SPECIALIZATIONS: int = 3

    # Число случайных троек для свойств скобки
    TRIALS: int = 500

    SHOW_PROGRESS: bool = False


verify_settings = VerifySettings()
