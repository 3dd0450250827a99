"""
应用配置管理

使用 pydantic-settings 管理环境变量和配置
"""

from typing import Literal
from pydantic import Field
from pydantic_settings import BaseSettings, SettingsConfigDict


class Settings(BaseSettings):
    """
    应用配置类

    自动从环境变量和 .env 文件读取配置
    """

    # ========== 应用环境 ==========
    app_env: Literal["test", "dev", "staging", "prod"] = "dev"
    app_name: str = "precomputed-drf"
    app_version: str = "0.1.0"

    # ========== 日志配置 ==========
    log_level: str = "WARNING"
    # 为空时不写文件
    log_file: str = ""

    # ========== 实验配置 ==========
    # 环境变量: BENCH_DEFAULT_SEED
    bench_default_seed: int = Field(default=0, ge=0)
    # 环境变量: BENCH_DEFAULT_TRIALS
    bench_default_trials: int = Field(default=30, ge=1)
    # 环境变量: BENCH_WORKERS（1 表示串行）
    bench_workers: int = Field(default=1, ge=1)
    # 环境变量: BENCH_OUTPUT_DIR
    bench_output_dir: str = "results"

    # ========== 输出格式 ==========
    stats_delimiter: str = Field(default=",", min_length=1, max_length=1)
    schema_version: str = "1"

    model_config = SettingsConfigDict(
        env_file=".env",
        env_file_encoding="utf-8",
        case_sensitive=False,
        extra="ignore",  # 忽略未定义的环境变量
    )


# 全局配置实例（单例）
_settings: Settings | None = None


def get_settings() -> Settings:
    """
    获取配置实例（单例模式）

    Returns:
        Settings 实例
    """
    global _settings
    if _settings is None:
        _settings = Settings()
    return _settings


def reset_settings() -> None:
    """丢弃缓存的配置，下次 get_settings() 重新读取环境变量（测试用）"""
    global _settings
    _settings = None
