from dataclasses import dataclass
from typing import Tuple

from rest_framework import serializers

from .typecheck import TypeUniverse
from .values import literal_value


@dataclass(frozen=True)
class BoundArguments:
    # (parameter, value) pairs in parameter order
    values: Tuple[Tuple[str, object], ...] = ()

    def __getitem__(self, name):
        return dict(self.values)[name]

    def __len__(self):
        return len(self.values)


def bind_arguments(ir, args):
    """Bind ``args`` (name to RuntimeValue) to the call-site's inputs.

    Omitted parameters take their declared defaults. Raises ValidationError
    keyed by the path of the offending value, e.g. ``repo_state.files[2]``.
    """
    params = [slot.value for slot in ir.inputs]
    unexpected = sorted(set(args) - {param.name for param in params})
    if unexpected:
        raise serializers.ValidationError({unexpected[0]: ['unexpected argument']})
    universe = TypeUniverse.from_mtir(ir)
    bound = []
    for param in params:
        if param.name in args:
            value = args[param.name]
        elif param.default is not None:
            value = literal_value(param.default)
        else:
            raise serializers.ValidationError({param.name: ['missing required argument']})
        bound.append((param.name, universe.check(value, param.type, param.name)))
    return BoundArguments(tuple(bound))
