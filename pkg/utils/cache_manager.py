import hashlib
import json
import os
import threading
from datetime import datetime
from typing import Any, Dict, Optional

from .logs import logger
from .schemas import RunConfig

DEFAULT_CACHE_DIR = os.path.join("data", "cache")


def _digest(payload: Any) -> str:
    return hashlib.sha256(json.dumps(payload, sort_keys=True, ensure_ascii=False).encode("utf-8")).hexdigest()


class ResultCache:
    """以规范化运行配置为键的结果缓存

    每个条目是一个 JSON 文件, index.json 记录其内容摘要. 文件无法读取或摘要不一致的条目会被清除
    """

    _instance = None
    _lock = threading.Lock()

    def __new__(cls, directory: str = DEFAULT_CACHE_DIR):
        if cls._instance is None or cls._instance.directory != directory:
            with cls._lock:
                if cls._instance is None or cls._instance.directory != directory:
                    instance = super(ResultCache, cls).__new__(cls)
                    instance._initialized = False
                    cls._instance = instance
        return cls._instance

    def __init__(self, directory: str = DEFAULT_CACHE_DIR):
        if self._initialized:
            return
        self.directory = directory
        self.index: Dict[str, Dict[str, str]] = {}
        os.makedirs(self.directory, exist_ok=True)
        self._load_index()
        self._initialized = True

    @property
    def index_path(self) -> str:
        return os.path.join(self.directory, "index.json")

    def _entry_path(self, key: str) -> str:
        return os.path.join(self.directory, f"{key}.json")

    def _load_index(self):
        if not os.path.exists(self.index_path):
            return
        try:
            with open(self.index_path, "r", encoding="utf-8") as f:
                self.index = json.load(f).get("index", {})
        except (OSError, json.JSONDecodeError) as e:
            logger.error(f"Failed to load cache index: {e}")
            self.index = {}

    def _save_index(self):
        data = {"last_updated": datetime.now().isoformat(), "index": self.index}
        with open(self.index_path, "w", encoding="utf-8") as f:
            json.dump(data, f, ensure_ascii=False, sort_keys=True)

    @staticmethod
    def key_for(config: RunConfig) -> str:
        return hashlib.sha256(f"{config.command}\n{config.cache_payload()}".encode("utf-8")).hexdigest()

    def get(self, config: RunConfig) -> Optional[Dict[str, Any]]:
        key = self.key_for(config)
        with self._lock:
            meta = self.index.get(key)
            if meta is None:
                logger.info(f"cache miss {config.command} {key[:12]}")
                return None
            try:
                with open(self._entry_path(key), "r", encoding="utf-8") as f:
                    payload = json.load(f)
            except (OSError, json.JSONDecodeError) as e:
                logger.warning(f"evicting unreadable cache entry {key[:12]}: {e}")
                self._evict(key)
                return None
            if _digest(payload) != meta.get("digest"):
                logger.warning(f"evicting cache entry {key[:12]} with a stale digest")
                self._evict(key)
                return None
        logger.info(f"cache hit {config.command} {key[:12]}")
        return payload

    def put(self, config: RunConfig, payload: Dict[str, Any]) -> None:
        key = self.key_for(config)
        with self._lock:
            with open(self._entry_path(key), "w", encoding="utf-8") as f:
                json.dump(payload, f, ensure_ascii=False, sort_keys=True)
            self.index[key] = {"command": config.command, "digest": _digest(payload)}
            self._save_index()

    def _evict(self, key: str) -> None:
        self.index.pop(key, None)
        path = self._entry_path(key)
        if os.path.exists(path):
            os.remove(path)
        self._save_index()

    def clear(self) -> None:
        with self._lock:
            for key in list(self.index):
                self._evict(key)


def get_result_cache(directory: str = DEFAULT_CACHE_DIR) -> ResultCache:
    return ResultCache(directory)
