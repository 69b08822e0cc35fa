"""The Salvetti complex as an abstract poset of (face, chamber) pairs."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Dict, Iterator, List, Tuple

from .faces import FacePoset, compose, enumerate_faces, face_leq
from .geometry import Arrangement, SignVector


@dataclass(frozen=True)
class SalvettiCell:
    face: SignVector
    chamber: SignVector
    dim: int


@dataclass
class SalvettiComplex:
    faces: FacePoset
    cells: List[SalvettiCell]

    @staticmethod
    def leq(a: SalvettiCell, b: SalvettiCell) -> bool:
        """``(X1, C1) <= (X2, C2)`` iff ``X1 >= X2`` and ``X1 o C2 = C1``."""
        return face_leq(b.face, a.face) and compose(a.face, b.chamber) == a.chamber

    def counts(self) -> List[int]:
        top = max((c.dim for c in self.cells), default=0)
        out = [0] * (top + 1)
        for c in self.cells:
            out[c.dim] += 1
        return out

    def covering_pairs(self) -> Iterator[Tuple[SalvettiCell, SalvettiCell]]:
        """Pairs ``a < b`` with ``dim b = dim a + 1`` (the Hasse diagram)."""
        by_dim: Dict[int, List[SalvettiCell]] = {}
        for c in self.cells:
            by_dim.setdefault(c.dim, []).append(c)
        for d, lower in sorted(by_dim.items()):
            for b in by_dim.get(d + 1, []):
                for a in lower:
                    if self.leq(a, b):
                        yield a, b


def build_salvetti(arr_or_faces) -> SalvettiComplex:
    faces = arr_or_faces if isinstance(arr_or_faces, FacePoset) else enumerate_faces(arr_or_faces)
    chambers = [C.signs for C in faces.chambers]
    cells = [SalvettiCell(X.signs, C, X.codim)
             for X in faces.faces for C in chambers if face_leq(X.signs, C)]
    return SalvettiComplex(faces, cells)


def euler_characteristic(cx: SalvettiComplex) -> int:
    return sum((-1) ** c.dim for c in cx.cells)
