"""
Built-in example codes shipped under data/examples/.

The expected d of each example is the inner-code distance wt(N(S0)\\S0). The
gauge-group weight wt(N(S_Q)\\G) can sit below it (toric18: 2, grassl12: 4).
"""
import os
from dataclasses import dataclass

from codes.hybrid import HybridParams
from data.code_file import CodeFile, parse_code_file

EXAMPLE_DIR = os.path.join(os.path.dirname(os.path.abspath(__file__)), "examples")


@dataclass(frozen=True)
class Example:
    name: str
    params: HybridParams
    description: str
    max_weight: int = None  # None: config default
    slow: bool = False

    @property
    def path(self) -> str:
        return os.path.join(EXAMPLE_DIR, "%s.code" % self.name)


EXAMPLES = {
    e.name: e
    for e in [
        Example("shaw6", HybridParams(6, 1, 1, 3, 2), "6-qubit subsystem code, gauge fixed"),
        Example("gottesman9x", HybridParams(9, 3, 1, 3, 3), "extended 8-qubit code with an appended X"),
        Example("gottesman9", HybridParams(9, 3, 1, 3, 1), "extended 8-qubit code, no appended X"),
        Example("toric18", HybridParams(18, 2, 12, 3, 2), "toric code as a subsystem code, gauge fixed",
                max_weight=3, slow=True),
        Example("grassl12", HybridParams(12, 1, 1, 5, 4), "extended [[12,1,5]] code with an appended X",
                slow=True),
        Example("baconshor9", HybridParams(9, 1, 4, 3, 2), "3x3 Bacon-Shor code, every G^Z fixed"),
    ]
}


def list_examples():
    return list(EXAMPLES.values())


def get_example(name: str) -> Example:
    if name not in EXAMPLES:
        raise KeyError("unknown example %r, known: %s" % (name, ", ".join(EXAMPLES)))
    return EXAMPLES[name]


def example_text(name: str) -> str:
    with open(get_example(name).path, "r", encoding="utf-8") as f:
        return f.read()


def load_example(name: str) -> CodeFile:
    return parse_code_file(example_text(name))


def is_example(name: str) -> bool:
    return name in EXAMPLES
