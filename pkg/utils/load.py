from typing import Any, Dict

import yaml

from .logs import logger
from .schemas import PresetTable, Settings

SETTINGS_FILE = "./config/settings.yaml"
PRESETS_FILE = "./config/presets.yaml"


def _read_yaml(yaml_file: str) -> Dict[str, Any]:
    try:
        with open(yaml_file, "r", encoding="utf-8") as f:
            return yaml.safe_load(f) or {}
    except (FileNotFoundError, yaml.YAMLError) as e:
        logger.error(f"加载配置失败 {yaml_file}: {e}")
        raise


def load_settings(yaml_file: str = SETTINGS_FILE) -> Settings:
    """加载运行配置

    Args:
        yaml_file (str): 配置文件路径

    Returns:
        Settings: 预算、缓存与线程配置
    """
    return Settings.model_validate(_read_yaml(yaml_file))


def load_presets(yaml_file: str = PRESETS_FILE) -> Dict[str, PresetTable]:
    """加载量子码参数预设

    Args:
        yaml_file (str): 预设文件路径

    Returns:
        Dict[str, PresetTable]: 预设名称到已发表参数表的映射
    """
    raw = _read_yaml(yaml_file)
    return {name: PresetTable.model_validate(table) for name, table in raw.get("presets", {}).items()}
