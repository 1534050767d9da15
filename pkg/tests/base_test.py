import unittest
from functools import lru_cache
from typing import Iterable, List, Sequence

from algebra.curve import CurveInstance, build_curve
from algebra.monomial import MonomialSet
from algebra.params import CurveParams
from utils.load import load_settings
from utils.logs import logger


class NormTraceTest(unittest.TestCase):
    """范数-迹曲线测试基类"""

    def setUp(self):
        """测试前准备工作，加载运行配置"""
        self.settings = load_settings("./config/settings.yaml")
        self.result = None

    def tearDown(self):
        """测试后输出结果"""
        if self.result is not None:
            logger.debug(f"{self.id()}: {self.result}")

    def assertLabels(self, M: MonomialSet, labels: Iterable[str]):
        self.assertEqual(set(M.labels()), set(labels))


@lru_cache(maxsize=None)
def curve(q: int, s: int, u: int) -> CurveInstance:
    """点集枚举较慢, 同一曲线在测试间共享"""
    return build_curve(q, s, u)


def monomials(params: CurveParams, pairs: Sequence[Sequence[int]]) -> MonomialSet:
    return MonomialSet.of(params, pairs)


def empty(params: CurveParams) -> MonomialSet:
    return MonomialSet(frozenset(), params)


def values(results) -> List[int]:
    return [res.value for res in results]
