"""Label encoding of transformation vocabularies and path extraction from search trees."""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from typing import Iterable

from .model import SearchTree, SolutionSet, TransformationStep


class UnknownTokenError(KeyError):
    """A step token has no symbol in the encoding table."""


class UnknownNodeError(KeyError):
    """The queried node id is not part of the tree."""


class UnreachableNodeError(ValueError):
    """The queried node cannot be reached from the root."""


@dataclass(frozen=True)
class EncodedStep:
    """A transformation step mapped into symbol space.

    ``name`` and ``args`` live in separate symbol spaces; equality of an int
    across the two spaces carries no meaning.
    """

    name: int
    args: tuple[int, ...]


# Sentinel used to align sequences of different lengths; at distance 1 from
# every real step and 0 from itself.
PAD = EncodedStep(name=-1, args=())


@dataclass(frozen=True)
class EncodingTable:
    """Injective token -> dense symbol maps, one per space (names, args)."""

    name_symbols: dict[str, int]
    arg_symbols: dict[str, int]

    def encode_step(self, step: TransformationStep) -> EncodedStep:
        try:
            name = self.name_symbols[step.name]
        except KeyError:
            raise UnknownTokenError(step.name) from None
        args = []
        for a in step.args:
            try:
                args.append(self.arg_symbols[a])
            except KeyError:
                raise UnknownTokenError(a) from None
        return EncodedStep(name, tuple(args))

    def encode_sequence(self, steps: Iterable[TransformationStep]) -> tuple[EncodedStep, ...]:
        return tuple(self.encode_step(s) for s in steps)

    def decode_step(self, encoded: EncodedStep) -> TransformationStep:
        names = {v: k for k, v in self.name_symbols.items()}
        args = {v: k for k, v in self.arg_symbols.items()}
        return TransformationStep(names[encoded.name], tuple(args[a] for a in encoded.args))


def build_encoding(sets: list[SolutionSet]) -> EncodingTable:
    """Assign dense symbols in first-occurrence order over the given sets.

    Names and arguments get separate symbol spaces, so the same token used as
    a name and as an argument receives one symbol in each.
    """
    if not sets:
        raise ValueError("at least one solution set is required")
    name_symbols: dict[str, int] = {}
    arg_symbols: dict[str, int] = {}
    for solution_set in sets:
        for sol in solution_set.solutions:
            for step in sol.sequence:
                if step.name not in name_symbols:
                    name_symbols[step.name] = len(name_symbols)
                for a in step.args:
                    if a not in arg_symbols:
                        arg_symbols[a] = len(arg_symbols)
    return EncodingTable(name_symbols, arg_symbols)


def encode_step(step: TransformationStep, table: EncodingTable) -> EncodedStep:
    """Encode one step against ``table``; unknown tokens raise UnknownTokenError."""
    return table.encode_step(step)


def extract_sequence(tree: SearchTree, node_id: str) -> tuple[TransformationStep, ...]:
    """Steps along a shortest root-to-node path, root-first.

    Ties between equal-length paths in a DAG are broken by choosing the
    lexicographically smallest path by child-id order.
    """
    if node_id not in tree.nodes:
        raise UnknownNodeError(node_id)
    adj = tree.children()

    depth = _bfs_depths(tree, adj)
    if node_id not in depth:
        raise UnreachableNodeError(f"node {node_id!r} is unreachable from root {tree.root_id!r}")

    # Depth-limited DFS with children in id order: the first complete path
    # found is the lexicographically smallest shortest one.
    target_depth = depth[node_id]
    path = _dfs_first_path(tree.root_id, node_id, target_depth, adj, depth)
    assert path is not None
    return tuple(path)


def _bfs_depths(tree: SearchTree, adj: dict[str, list[tuple[str, TransformationStep]]]) -> dict[str, int]:
    depth = {tree.root_id: 0}
    queue = deque([tree.root_id])
    while queue:
        node = queue.popleft()
        for child, _ in adj[node]:
            if child not in depth:
                depth[child] = depth[node] + 1
                queue.append(child)
    return depth


def _dfs_first_path(
    node: str,
    target: str,
    remaining: int,
    adj: dict[str, list[tuple[str, TransformationStep]]],
    depth: dict[str, int],
) -> list[TransformationStep] | None:
    if node == target:
        return [] if remaining == 0 else None
    if remaining == 0:
        return None
    for child, step in adj[node]:
        # Prune children that cannot sit on a shortest path.
        if depth.get(child, remaining + 1) > depth[target]:
            continue
        tail = _dfs_first_path(child, target, remaining - 1, adj, depth)
        if tail is not None:
            return [step] + tail
    return None
