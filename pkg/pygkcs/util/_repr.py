#
# Copyright (c) 2020 pygkcs developers
# This software is distributed under the terms of the MIT License.
#


def repr_attributes(obj: object, *anonymous_elements: object, **named_elements: object) -> str:
    """
    Constructs the :func:`repr` form of an object from its type name and the given elements.

    >>> class Grid: pass
    >>> repr_attributes(Grid())
    'Grid()'
    >>> repr_attributes(Grid(), 0.5, count=3, kind='linear')
    "Grid(0.5, count=3, kind='linear')"
    """
    fld = list(map(repr, anonymous_elements)) + list(f'{name}={value!r}' for name, value in named_elements.items())
    return f'{type(obj).__name__}(' + ', '.join(fld) + ')'
