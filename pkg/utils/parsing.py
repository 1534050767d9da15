import re
from typing import Optional, Tuple

from algebra.errors import MonomialError
from algebra.monomial import Monomial, MonomialSet, build_box, build_degree_set, build_onepoint_set
from algebra.params import CurveParams

from .logs import logger

_BOUND_RE = re.compile(r"^(deg|wdeg)\s*<=\s*(\d+)$")


def parse_monomial_spec(spec: str, params: CurveParams) -> Tuple[MonomialSet, Optional[int]]:
    """解析单项式集合描述

    支持 deg<=D (总次数), wdeg<=L (权重, 一点码), box (盒内全部单项式) 与 list:x2y1,y3,1 (显式列表)

    Args:
        spec (str): 单项式集合描述
        params (CurveParams): 曲线参数

    Returns:
        Tuple[MonomialSet, Optional[int]]: 单项式集合, 以及 deg<=D 形式的次数 D
    """
    text = spec.strip().replace(" ", "")
    match = _BOUND_RE.match(text)
    if match:
        kind, bound = match.group(1), int(match.group(2))
        if kind == "deg":
            return build_degree_set(params, bound), bound
        return build_onepoint_set(params, bound), None
    if text == "box":
        return build_box(params), None
    if text.startswith("list:"):
        items = [item for item in text[len("list:") :].split(",") if item]
        if not items:
            raise MonomialError("empty monomial list")
        M = MonomialSet(frozenset(Monomial.parse(item) for item in items), params)
        M.check_box()
        return M, None
    logger.error(f"无法解析单项式集合: {spec}")
    raise MonomialError(f"unknown monomial set '{spec}', expected deg<=D, wdeg<=L, box or list:...")
