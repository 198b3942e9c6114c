"""Strategy / refutation trees for back-and-forth queries."""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Any, List, Tuple


@dataclass
class Move:
    """A forall-move together with exists-responses.

    In a holding node each move carries exactly one (winning) response.  In a
    failing node there is a single move and every response is listed with a
    losing child.
    """

    forall: Any
    responses: List[Tuple[Any, "Certificate"]] = field(default_factory=list)


@dataclass
class Certificate:
    holds: bool
    rank: int
    left: Any
    right: Any
    moves: List[Move] = field(default_factory=list)
    # interval children of a pebbled node (symbolic engine only)
    children: List["Certificate"] = field(default_factory=list)
    note: str = ""

    @property
    def depth(self) -> int:
        memo = {}

        def go(node):
            if id(node) not in memo:
                d = 0
                for m in node.moves:
                    for _, child in m.responses:
                        d = max(d, 1 + go(child))
                for c in node.children:
                    d = max(d, go(c))
                memo[id(node)] = d
            return memo[id(node)]

        return go(self)

    def nodes(self):
        yield self
        for m in self.moves:
            for _, child in m.responses:
                yield from child.nodes()
        for c in self.children:
            yield from c.nodes()

    def unique_nodes(self):
        """Each node once, even when subtrees are shared."""
        seen = set()
        stack = [self]
        while stack:
            node = stack.pop()
            if id(node) in seen:
                continue
            seen.add(id(node))
            yield node
            for m in node.moves:
                stack.extend(child for _, child in m.responses)
            stack.extend(node.children)

    def to_dict(self, render=str) -> dict:
        d = {
            "holds": self.holds,
            "rank": self.rank,
            "left": render(self.left),
            "right": render(self.right),
        }
        if self.note:
            d["note"] = self.note
        if self.moves:
            d["moves"] = [
                {"forall": render(m.forall),
                 "responses": [{"exists": render(r), "child": c.to_dict(render)}
                               for r, c in m.responses]}
                for m in self.moves
            ]
        if self.children:
            d["children"] = [c.to_dict(render) for c in self.children]
        return d

    def pretty(self, render=str, indent: int = 0) -> str:
        pad = "  " * indent
        verdict = "holds" if self.holds else "fails"
        lines = [f"{pad}{render(self.left)} <=_{self.rank} {render(self.right)}: {verdict}"
                 + (f" ({self.note})" if self.note else "")]
        for m in self.moves:
            lines.append(f"{pad}  forall {render(m.forall)}")
            for r, c in m.responses:
                lines.append(f"{pad}    exists {render(r)}")
                lines.append(c.pretty(render, indent + 3))
        for c in self.children:
            lines.append(c.pretty(render, indent + 1))
        return "\n".join(lines)
