import io
import json
from typing import Any, Dict, List, Optional, Sequence, Type

import pandas as pd

from .logs import logger
from .schemas import PresetRow, QuantumRow

HIERARCHY_COLUMNS = ["r", "d_r", "cartesian", "singleton", "method", "exact", "witness"]
QUANTUM_COLUMNS = ["lambda1", "lambda2", "n", "k", "delta_z", "delta_x", "impure", "d1_C1", "d1_C2perp"]


def engine_class(method: str) -> Type:
    """按名称动态导入计算引擎

    Args:
        method (str): exhaustive, fastpath, maxcase 或 oracle

    Returns:
        Type: 引擎类
    """
    try:
        return getattr(__import__("engines"), f"{method.title()}Engine")
    except (ImportError, AttributeError) as e:
        logger.error(f"引擎导入失败: {e}")
        raise ValueError(f"无法找到引擎: {method.title()}Engine")


def hierarchy_frame(rows: Sequence[Dict[str, Any]]) -> pd.DataFrame:
    """重量层级表

    Args:
        rows (Sequence[Dict[str, Any]]): GhwRow 字典

    Returns:
        pd.DataFrame: 每个 r 一行
    """
    df = pd.DataFrame(list(rows))
    if df.empty:
        return pd.DataFrame(columns=HIERARCHY_COLUMNS)
    df["witness"] = df["witness"].map(" ".join)
    return df[[c for c in HIERARCHY_COLUMNS if c in df.columns]]


def relative_frame(rows: Sequence[Dict[str, Any]]) -> pd.DataFrame:
    df = pd.DataFrame(list(rows))
    if not df.empty:
        df["witness"] = df["witness"].map(" ".join)
    return df


def quantum_frame(rows: Sequence[Dict[str, Any]]) -> pd.DataFrame:
    """量子码参数表, 列顺序与发表的表格一致"""
    df = pd.DataFrame(list(rows))
    if df.empty:
        return pd.DataFrame(columns=QUANTUM_COLUMNS)
    df["parameters"] = [
        f"[[{n},{k},{z}/{x}]]" + ("*" if impure else "")
        for n, k, z, x, impure in zip(df["n"], df["k"], df["delta_z"], df["delta_x"], df["impure"])
    ]
    extra = [c for c in ("matches_published", "g", "note") if c in df.columns and df[c].notna().any()]
    return df[QUANTUM_COLUMNS + ["parameters"] + extra]


def compare_with_published(row: QuantumRow, published: PresetRow) -> bool:
    return (row.n, row.k, row.delta_z, row.delta_x, row.impure) == (
        published.n,
        published.k,
        published.delta_z,
        published.delta_x,
        published.impure,
    )


def render(payload: Dict[str, Any], fmt: str, table: Optional[pd.DataFrame] = None, notes: Optional[List[str]] = None) -> str:
    """渲染输出报告

    Args:
        payload (Dict[str, Any]): 报告内容
        fmt (str): 输出格式, json、csv (含表头, LF换行) 或 text
        table (Optional[pd.DataFrame]): csv 与 text 使用的表格
        notes (Optional[List[str]]): 追加在 text 表格之后的注释

    Returns:
        str: 渲染后的文本
    """
    if fmt == "json":
        return json.dumps(payload, sort_keys=True, ensure_ascii=False, indent=2) + "\n"
    if table is None:
        table = pd.json_normalize(payload, sep=".")
    if fmt == "csv":
        buffer = io.StringIO()
        table.to_csv(buffer, index=False, lineterminator="\n")
        return buffer.getvalue()
    text = table.to_string(index=False) + "\n"
    for note in notes or []:
        text += f"# {note}\n"
    return text
