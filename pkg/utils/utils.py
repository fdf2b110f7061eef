#! /usr/bin/env python3
# -*- coding: utf-8 -*-
"""General utilities.

@version  0.1.0
@license  MIT
"""


class SizeLimitError(Exception):
    """An instance exceeds a configured size guard."""


def check_limit(name: str, value: int, limit: int):
    """Raises `SizeLimitError` if `value` exceeds `limit`.

    Parameters:
        name (str): Quantity being guarded, used in the message.
        value (int): Requested size.
        limit (int): Largest allowed size.
    """
    if value > limit:
        raise SizeLimitError(f'{name}={value} > limit={limit}!')


def check_choice(name: str, value, choices):
    """Raises `ValueError` if `value` is not one of `choices`."""
    if value not in choices:
        raise ValueError(
            f'{name} = {value} is not valid!'
            f'\nValid values are: {list(choices)}'
        )
    return value


def check_positive(name: str, value: float):
    """Raises `ValueError` unless `value` > 0."""
    if not value > 0:
        raise ValueError(f'{name} = {value} is not valid! Must be > 0.')
    return value


def ceil_log3(K: int) -> int:
    """Smallest n >= 1 with 3**n >= K."""
    n = 1
    while 3 ** n < K:
        n += 1
    return n
