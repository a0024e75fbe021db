"""Named workspaces and their line-oriented text format.

Format (UTF-8, '#' starts a comment, keywords case-sensitive)::

    group <name> <n>
    <n lines of n space-separated indices>     # row a, column b holds a*b
    hom <name> <src-group> <dst-group>
    <one line of |src| indices>                # image of element i at slot i
    action <name> <actor-group> <acted-group>
    <|actor| lines of |acted| indices>         # line b is the permutation of b

Serialisation is deterministic (groups, then homs, then actions, each sorted
by name) and round-trips byte for byte.
"""

from __future__ import annotations

from functools import lru_cache

from .actions import Action, validate_action
from .errors import (
    DuplicateName,
    TwistcommError,
    WorkspaceSyntaxError,
    WorkspaceValidationError,
)
from .groups import FiniteGroup, builtin_group, direct_product, validate_group
from .homs import Homomorphism, make_hom


class Workspace:
    """Named groups, homomorphisms and actions; names unique per kind."""

    def __init__(self):
        self.groups: dict[str, FiniteGroup] = {}
        self.homs: dict[str, Homomorphism] = {}
        self.actions: dict[str, Action] = {}
        self._hom_refs: dict[str, tuple[str, str]] = {}
        self._action_refs: dict[str, tuple[str, str]] = {}

    def add_group(self, name: str, group: FiniteGroup) -> None:
        # re-adding an identical object is a no-op, so round-tripped files
        # load cleanly on top of the catalog
        if name in self.groups:
            if self.groups[name] == group:
                return
            raise DuplicateName("group", name)
        self.groups[name] = group

    def add_hom(self, name: str, hom: Homomorphism, source: str, target: str) -> None:
        if name in self.homs:
            if self.homs[name] == hom and self._hom_refs[name] == (source, target):
                return
            raise DuplicateName("hom", name)
        if self.groups.get(source) != hom.source or self.groups.get(target) != hom.target:
            raise TwistcommError(f"hom {name!r} references unknown or mismatched groups")
        self.homs[name] = hom
        self._hom_refs[name] = (source, target)

    def add_action(self, name: str, action: Action, actor: str, acted: str) -> None:
        if name in self.actions:
            if self.actions[name] == action and self._action_refs[name] == (actor, acted):
                return
            raise DuplicateName("action", name)
        if (
            self.groups.get(actor) != action.actor
            or self.groups.get(acted) != action.acted
        ):
            raise TwistcommError(f"action {name!r} references unknown or mismatched groups")
        self.actions[name] = action
        self._action_refs[name] = (actor, acted)

    def __eq__(self, other) -> bool:
        if not isinstance(other, Workspace):
            return NotImplemented
        return (
            self.groups == other.groups
            and self.homs == other.homs
            and self.actions == other.actions
            and self._hom_refs == other._hom_refs
            and self._action_refs == other._action_refs
        )


def _scan(text: str):
    """Yield (line number, token list) for nonblank lines, comments stripped."""
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if line:
            yield lineno, line.split()


def _read_row(rows, expect_len: int, what: str) -> tuple[int, list[int]]:
    try:
        lineno, tokens = next(rows)
    except StopIteration:
        raise WorkspaceSyntaxError(0, f"unexpected end of input inside {what}") from None
    try:
        values = [int(t) for t in tokens]
    except ValueError:
        raise WorkspaceSyntaxError(lineno, f"expected integers in {what}") from None
    if len(values) != expect_len:
        raise WorkspaceSyntaxError(
            lineno, f"expected {expect_len} entries in {what}, got {len(values)}"
        )
    return lineno, values


def parse(text: str, into: Workspace | None = None) -> Workspace:
    """Parse a workspace file, adding to ``into`` when given."""
    ws = into if into is not None else Workspace()
    rows = _scan(text)
    for lineno, tokens in rows:
        kind = tokens[0]
        if kind == "group":
            if len(tokens) != 3:
                raise WorkspaceSyntaxError(lineno, "expected: group <name> <n>")
            name = tokens[1]
            try:
                n = int(tokens[2])
            except ValueError:
                raise WorkspaceSyntaxError(lineno, "group order must be an integer") from None
            if n < 1:
                raise WorkspaceSyntaxError(lineno, "group order must be positive")
            table = []
            for _ in range(n):
                _, row = _read_row(rows, n, f"group {name!r}")
                table.append(row)
            try:
                ws.add_group(name, validate_group(table, name))
            except DuplicateName:
                raise
            except TwistcommError as exc:
                raise WorkspaceValidationError(lineno, exc) from exc
            except ValueError as exc:
                raise WorkspaceSyntaxError(lineno, str(exc)) from exc
        elif kind == "hom":
            if len(tokens) != 4:
                raise WorkspaceSyntaxError(lineno, "expected: hom <name> <src> <dst>")
            name, src, dst = tokens[1], tokens[2], tokens[3]
            if src not in ws.groups or dst not in ws.groups:
                raise WorkspaceSyntaxError(lineno, f"hom {name!r} references unknown group")
            _, row = _read_row(rows, ws.groups[src].order, f"hom {name!r}")
            try:
                ws.add_hom(name, make_hom(ws.groups[src], ws.groups[dst], row), src, dst)
            except DuplicateName:
                raise
            except TwistcommError as exc:
                raise WorkspaceValidationError(lineno, exc) from exc
            except ValueError as exc:
                raise WorkspaceSyntaxError(lineno, str(exc)) from exc
        elif kind == "action":
            if len(tokens) != 4:
                raise WorkspaceSyntaxError(lineno, "expected: action <name> <actor> <acted>")
            name, actor, acted = tokens[1], tokens[2], tokens[3]
            if actor not in ws.groups or acted not in ws.groups:
                raise WorkspaceSyntaxError(lineno, f"action {name!r} references unknown group")
            table = []
            for _ in range(ws.groups[actor].order):
                _, row = _read_row(rows, ws.groups[acted].order, f"action {name!r}")
                table.append(row)
            try:
                ws.add_action(
                    name,
                    validate_action(ws.groups[actor], ws.groups[acted], table),
                    actor,
                    acted,
                )
            except DuplicateName:
                raise
            except TwistcommError as exc:
                raise WorkspaceValidationError(lineno, exc) from exc
            except ValueError as exc:
                raise WorkspaceSyntaxError(lineno, str(exc)) from exc
        else:
            raise WorkspaceSyntaxError(lineno, f"unknown keyword {kind!r}")
    return ws


def serialize(ws: Workspace) -> str:
    lines: list[str] = []
    for name in sorted(ws.groups):
        g = ws.groups[name]
        lines.append(f"group {name} {g.order}")
        lines.extend(" ".join(str(int(v)) for v in row) for row in g.mul)
    for name in sorted(ws.homs):
        src, dst = ws._hom_refs[name]
        lines.append(f"hom {name} {src} {dst}")
        lines.append(" ".join(str(int(v)) for v in ws.homs[name].map))
    for name in sorted(ws.actions):
        actor, acted = ws._action_refs[name]
        lines.append(f"action {name} {actor} {acted}")
        lines.extend(
            " ".join(str(int(v)) for v in row) for row in ws.actions[name].table
        )
    return "\n".join(lines) + "\n" if lines else ""


CATALOG_NAMES = tuple(
    [f"Z{i}" for i in range(1, 13)]
    + ["klein4", "D3", "D4", "D5", "D6", "S3", "S4", "Q8", "Z2xZ4"]
)


@lru_cache(maxsize=1)
def _catalog_groups() -> dict[str, FiniteGroup]:
    groups: dict[str, FiniteGroup] = {}
    for i in range(1, 13):
        groups[f"Z{i}"] = builtin_group("cyclic", i)
    groups["klein4"] = builtin_group("klein4")
    for i in (3, 4, 5, 6):
        groups[f"D{i}"] = builtin_group("dihedral", i)
    groups["S3"] = builtin_group("symmetric", 3)
    groups["S4"] = builtin_group("symmetric", 4)
    groups["Q8"] = builtin_group("quaternion8")
    z2x4, _, _ = direct_product(groups["Z2"], groups["Z4"])
    groups["Z2xZ4"] = FiniteGroup(z2x4.mul, z2x4.inv, "Z2xZ4")
    return groups


def catalog() -> Workspace:
    """A fresh workspace preloaded with the built-in group catalog."""
    ws = Workspace()
    for name, group in _catalog_groups().items():
        ws.add_group(name, group)
    return ws
