from .bruteforce import DEFAULT_ORACLE_BUDGET, ghw_bruteforce, rghw_bruteforce
from .subspaces import SubspaceIterator, gaussian_binomial
from .wei import WeiReport, check_hierarchy, wei_checks
from .witness import common_zero_count, witness_family

__all__ = [
    "DEFAULT_ORACLE_BUDGET",
    "SubspaceIterator",
    "WeiReport",
    "check_hierarchy",
    "common_zero_count",
    "gaussian_binomial",
    "ghw_bruteforce",
    "rghw_bruteforce",
    "wei_checks",
    "witness_family",
]
