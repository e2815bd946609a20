"""Parser and checker for the pipeline wiring language.

    node := IDENT '(' [node (',' node)*] ')'

Identifiers may carry a dotted package prefix, which is ignored.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field

from ..errors import ArityMismatch, DslError, DslSyntaxError, UnknownComponent
from .registry import ANALYSES, ANALYSIS_ALIASES, Component

_TOKEN = re.compile(r"\s*(?:([A-Za-z_][\w.]*)|(\()|(\))|(,)|(\S))")


@dataclass(frozen=True)
class PipelineNode:
    name: str
    args: tuple[PipelineNode, ...] = ()
    position: int = field(default=0, compare=False)

    def __str__(self) -> str:
        return f"{self.name}({', '.join(map(str, self.args))})"

    def walk(self):
        """Post-order: inputs before the node that consumes them."""
        for arg in self.args:
            yield from arg.walk()
        yield self


def _tokens(text: str):
    pos = 0
    out = []
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if m is None:
            break
        start = m.start(m.lastindex)
        if m.group(5):
            raise DslSyntaxError(f"unexpected character {m.group(5)!r}", start)
        out.append((m.group(m.lastindex), start))
        pos = m.end()
    out.append(("", len(text)))
    return out


def parse_pipeline_dsl(text: str, registry: dict[str, Component] = ANALYSES) -> PipelineNode:
    toks = _tokens(text)
    i = 0

    def expect(value: str) -> int:
        nonlocal i
        tok, pos = toks[i]
        if tok != value:
            raise DslSyntaxError(f"expected {value!r}, found {tok or 'end of input'!r}", pos)
        i += 1
        return pos

    def node() -> PipelineNode:
        nonlocal i
        tok, pos = toks[i]
        if not tok or not (tok[0].isalpha() or tok[0] == "_"):
            raise DslSyntaxError(f"expected a component name, found {tok or 'end of input'!r}", pos)
        i += 1
        short = tok.rsplit(".", 1)[-1]
        component = registry.get(ANALYSIS_ALIASES.get(short, short))
        if component is None:
            raise UnknownComponent(tok)
        expect("(")
        args = []
        if toks[i][0] != ")":
            args.append(node())
            while toks[i][0] == ",":
                i += 1
                args.append(node())
        expect(")")
        if not component.min_arity <= len(args) <= component.max_arity:
            raise ArityMismatch(component.name, component.arity_text(), len(args))
        return PipelineNode(component.name, tuple(args), pos)

    root = node()
    if toks[i][0]:
        raise DslSyntaxError(f"trailing input {toks[i][0]!r}", toks[i][1])
    return root


def bind_inputs(node: PipelineNode, registry: dict[str, Component] = ANALYSES) -> dict[str, PipelineNode]:
    """Map each input kind of ``node`` to the argument supplying it.

    Required inputs are positional; optional ones are matched by kind.
    """
    component = registry[node.name]
    kinds = [registry[arg.name].output for arg in node.args]
    bound: dict[str, PipelineNode] = {}
    for idx, want in enumerate(component.inputs):
        if kinds[idx] != want:
            source = node.args[idx].name
            raise DslError(f"{node.name}: input {idx + 1} must be {want}, got {kinds[idx]} from {source}")
        bound[want] = node.args[idx]
    for arg, kind in zip(node.args[len(component.inputs):], kinds[len(component.inputs):]):
        if kind not in component.optional or kind in bound:
            raise DslError(f"{node.name}: unexpected {kind} input from {arg.name}")
        bound[kind] = arg
    return bound


def check_pipeline(root: PipelineNode, registry: dict[str, Component] = ANALYSES) -> None:
    for node in root.walk():
        bind_inputs(node, registry)
