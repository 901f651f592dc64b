#
# Copyright (c) 2020 pygkcs developers
# This software is distributed under the terms of the MIT License.
#

"""
The YAML library we use is API-unstable at the time of writing. This facade shields the rest of the code
from breaking changes in the YAML library API or from migration to another library.
"""

import io
import typing
import ruamel.yaml


Scalar = typing.Union[None, bool, int, float, str]


class YAMLDumper:
    """
    YAML generation facade.
    """
    def __init__(self, explicit_start: bool = False):
        # The roundtrip representer retains the ordering of mappings.
        self._impl = ruamel.yaml.YAML(typ='rt')
        # noinspection PyTypeHints
        self._impl.explicit_start = explicit_start    # type: ignore
        self._impl.default_flow_style = False

    def dump(self, data: typing.Any, stream: typing.TextIO) -> None:
        self._impl.dump(data, stream)

    def dumps(self, data: typing.Any) -> str:
        s = io.StringIO()
        self.dump(data, s)
        return s.getvalue()


class YAMLLoader:
    """
    YAML parsing facade. The output contains built-in types only: mappings become dicts,
    sequences become lists, and the scalar subclasses of the YAML library are converted to their bases.
    """
    def __init__(self) -> None:
        self._impl = ruamel.yaml.YAML(typ='rt')

    def load(self, text: str) -> typing.Any:
        return _plain(self._impl.load(text))

    def load_flat_mapping(self, text: str) -> typing.Dict[str, typing.Union[Scalar, typing.List[Scalar]]]:
        """
        A mapping of string keys to scalars or lists of scalars; anything else is a :class:`ValueError`.
        An empty document is an empty mapping.

        >>> YAMLLoader().load_flat_mapping('beta: 2\\nx-grid: [0, 0.5]\\nformat: json')
        {'beta': 2, 'x-grid': [0, 0.5], 'format': 'json'}
        >>> YAMLLoader().load_flat_mapping('- 1')
        Traceback (most recent call last):
        ...
        ValueError: ...
        """
        data = self.load(text)
        if data is None:
            return {}
        if not isinstance(data, dict):
            raise ValueError(f'The configuration shall be a mapping; got {type(data).__name__}')
        for key, value in data.items():
            if not isinstance(key, str):
                raise ValueError(f'Configuration keys shall be strings; got {key!r}')
            items = value if isinstance(value, list) else [value]
            if any(isinstance(v, (dict, list)) for v in items):
                raise ValueError(f'The configuration shall be flat; the value of {key!r} is nested')
        return data


def _plain(data: typing.Any) -> typing.Any:
    if isinstance(data, dict):
        return {_plain(k): _plain(v) for k, v in data.items()}
    if isinstance(data, (list, tuple)):
        return [_plain(x) for x in data]
    if isinstance(data, bool) or data is None:
        return data
    if isinstance(data, int):
        return int(data)
    if isinstance(data, float):
        return float(data)
    if isinstance(data, str):
        return str(data)
    return data


def _unittest_yaml() -> None:
    import math
    import pytest

    ref = YAMLDumper(explicit_start=True).dumps({
        'config': {'command': 'cs-norm', 'x': [0.0, 1.5]},
        'rows': [{'x': 0.0, 'closed': 0.5}],
    })
    assert ref == """---
config:
  command: cs-norm
  x:
  - 0.0
  - 1.5
rows:
- x: 0.0
  closed: 0.5
"""
    loaded = YAMLLoader().load(ref)
    assert loaded == {'config': {'command': 'cs-norm', 'x': [0.0, 1.5]}, 'rows': [{'x': 0.0, 'closed': 0.5}]}
    assert type(loaded['rows'][0]['closed']) is float
    assert math.isnan(YAMLLoader().load('.nan'))

    assert YAMLLoader().load_flat_mapping('') == {}
    with pytest.raises(ValueError):
        YAMLLoader().load_flat_mapping('a: {b: 1}')
    with pytest.raises(ValueError):
        YAMLLoader().load_flat_mapping('a: [[1]]')
