"""Shared, cached constructions for the test suite."""

import functools

from qdouble import TwistedDouble, builtin_cyclic, builtin_group, cyclic_group


@functools.lru_cache(maxsize=None)
def untwisted(name: str) -> TwistedDouble:
    return TwistedDouble(builtin_group(name))


@functools.lru_cache(maxsize=None)
def untwisted_cyclic(n: int) -> TwistedDouble:
    return TwistedDouble(cyclic_group(n))


@functools.lru_cache(maxsize=None)
def twisted_cyclic(n: int, q: int) -> TwistedDouble:
    om = builtin_cyclic(n, q)
    return TwistedDouble(om.group, om)
