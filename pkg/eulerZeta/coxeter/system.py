"""Coxeter systems and the word problem by braid rewriting.

Elements are handled as normal forms: the ShortLex-least reduced word, with
generators ordered by index. A word is reduced iff no sequence of braid moves
produces two equal adjacent letters, and all reduced words of an element form a
single braid orbit, so the normal form is the least word of that orbit.
"""

import threading
from functools import lru_cache
from typing import Iterable, Optional

from pydantic import BaseModel, ConfigDict, ValidationError, field_validator, model_validator

from ..exceptions import InvalidInputError, ParseError
from ..log import get_logger

LOG = get_logger(__name__)

INF = 0
"""Matrix token standing for m(s, t) = infinity."""

Word = tuple[int, ...]
NormalForm = tuple[int, ...]


class CoxeterSystem(BaseModel):
    """Coxeter matrix with optional generator labels.

    Entries are ``1`` on the diagonal and ``>= 2`` or :data:`INF` off it.
    Generators are the indices ``0 .. rank - 1``.
    """

    model_config = ConfigDict(frozen=True)

    matrix: tuple[tuple[int, ...], ...]
    labels: Optional[tuple[str, ...]] = None
    name: str = ""

    @field_validator("matrix", mode="before")
    @classmethod
    def encode_infinity(cls, value):
        return tuple(tuple(INF if _is_infinite(m) else m for m in row) for row in value)

    @model_validator(mode="after")
    def check_coxeter_matrix(self):
        n = len(self.matrix)
        if n == 0:
            raise ValueError("rank must be positive")
        for i, row in enumerate(self.matrix):
            if len(row) != n:
                raise ValueError("matrix must be square")
            for j, m in enumerate(row):
                if m != self.matrix[j][i]:
                    raise ValueError(f"matrix not symmetric at ({i + 1}, {j + 1})")
                if i == j and m != 1:
                    raise ValueError(f"diagonal entry ({i + 1}, {i + 1}) must be 1")
                if i != j and m != INF and m < 2:
                    raise ValueError(f"entry ({i + 1}, {j + 1}) must be >= 2 or inf")
        if self.labels is not None and len(self.labels) != n:
            raise ValueError("one label per generator is required")
        return self

    # construction

    @classmethod
    def from_edges(cls, rank: int, edges: dict[tuple[int, int], int], name: str = "", labels=None) -> "CoxeterSystem":
        """Build from the non-commuting pairs; unspecified pairs commute."""
        matrix = [[1 if i == j else 2 for j in range(rank)] for i in range(rank)]
        for (i, j), m in edges.items():
            matrix[i][j] = matrix[j][i] = m
        try:
            return cls(matrix=matrix, name=name, labels=labels)
        except ValidationError as e:
            raise InvalidInputError(str(e)) from e

    @classmethod
    def finite(cls, family: str, n: int, m: Optional[int] = None) -> "CoxeterSystem":
        """Irreducible finite system of type ``family`` and rank ``n`` (``m`` for I2(m))."""
        from .classify import finite_diagram

        edges = finite_diagram(family, n, m)
        label = f"I2({m})" if family.upper() == "I" else f"{family.upper()}{n}"
        return cls.from_edges(n, edges, name=label)

    @classmethod
    def affine(cls, family: str, n: int) -> "CoxeterSystem":
        """Affine system whose spherical part has type ``family`` and rank ``n``."""
        from .classify import affine_diagram

        return cls.from_edges(n + 1, affine_diagram(family, n), name=f"~{family.upper()}{n}")

    @classmethod
    def product(cls, *systems: "CoxeterSystem") -> "CoxeterSystem":
        edges, offset = {}, 0
        for system in systems:
            for i in range(system.rank):
                for j in range(i + 1, system.rank):
                    if system.m(i, j) != 2:
                        edges[(offset + i, offset + j)] = system.m(i, j)
            offset += system.rank
        return cls.from_edges(offset, edges, name="x".join(s.name for s in systems))

    @classmethod
    def from_text(cls, text: str, source: str = "<input>") -> "CoxeterSystem":
        """Parse the ``rank`` / ``labels`` / ``m i j V`` directive format.

        Raises
        ------
        ParseError
            On unknown directives, bad numbers or out-of-range indices.
        """
        rank, labels, edges = None, None, {}
        for lineno, tokens in _directives(text):
            head = tokens[0]
            if head == "rank":
                if len(tokens) != 2 or not tokens[1].isdigit() or int(tokens[1]) < 1:
                    raise ParseError("expected 'rank N' with N >= 1", lineno, source)
                rank = int(tokens[1])
            elif head in ("q", "thickness"):
                raise ParseError(
                    "thickness belongs on the command line; only uniform thickness q + 1 is supported", lineno, source
                )
            elif head == "labels":
                labels = tuple(tokens[1:])
            elif head == "m":
                if rank is None:
                    raise ParseError("'m' directive before 'rank'", lineno, source)
                if len(tokens) != 4:
                    raise ParseError("expected 'm i j V'", lineno, source)
                try:
                    i, j = int(tokens[1]) - 1, int(tokens[2]) - 1
                    value = INF if tokens[3].lower() in ("inf", "infinity", "oo") else int(tokens[3])
                except ValueError:
                    raise ParseError(f"bad number in {' '.join(tokens)!r}", lineno, source) from None
                if not (0 <= i < rank and 0 <= j < rank) or i == j:
                    raise ParseError(f"generator indices out of range: {tokens[1]} {tokens[2]}", lineno, source)
                if value != INF and value < 2:
                    raise ParseError("m(s, t) must be >= 2 or inf", lineno, source)
                edges[(i, j)] = value
            else:
                raise ParseError(f"unknown directive {head!r}", lineno, source)
        if rank is None:
            raise ParseError("missing 'rank' directive", 1, source)
        if labels is not None and len(labels) != rank:
            raise ParseError(f"expected {rank} labels, got {len(labels)}", 1, source)
        return cls.from_edges(rank, edges, labels=labels)

    # structure

    @property
    def rank(self) -> int:
        return len(self.matrix)

    @property
    def generators(self) -> range:
        return range(self.rank)

    def m(self, i: int, j: int) -> int:
        return self.matrix[i][j]

    def label(self, i: int) -> str:
        return self.labels[i] if self.labels else f"s{i + 1}"

    def word_text(self, word: Iterable[int]) -> str:
        word = tuple(word)
        return "".join(self.label(i) for i in word) if word else "e"

    def restrict(self, subset: Iterable[int]) -> "CoxeterSystem":
        """Parabolic subsystem on ``subset``, re-indexed in increasing order."""
        subset = sorted(set(subset))
        if not subset:
            raise InvalidInputError("empty generator subset has no Coxeter system")
        labels = tuple(self.label(i) for i in subset)
        return CoxeterSystem(
            matrix=tuple(tuple(self.matrix[i][j] for j in subset) for i in subset),
            labels=labels,
        )

    def check_word(self, word: Iterable[int]) -> Word:
        word = tuple(word)
        for s in word:
            if not (isinstance(s, int) and 0 <= s < self.rank):
                raise InvalidInputError(f"generator index {s} outside [0, {self.rank})")
        return word

    # word problem

    def normal_form(self, word: Iterable[int]) -> NormalForm:
        """ShortLex-least reduced word equal to ``word`` in W."""
        rewriter = _rewriter(self.matrix)
        form: NormalForm = ()
        for s in self.check_word(word):
            form = rewriter.times_generator(form, s)
        return form

    def length(self, word: Iterable[int]) -> int:
        return len(self.normal_form(word))

    def multiply(self, *words: Iterable[int]) -> NormalForm:
        return self.normal_form(s for word in words for s in word)

    def inverse(self, word: Iterable[int]) -> NormalForm:
        return self.normal_form(reversed(tuple(word)))

    def times_generator(self, form: NormalForm, s: int) -> NormalForm:
        """Normal form of ``form * s`` for a normal form ``form``."""
        return _rewriter(self.matrix).times_generator(form, s)

    def reduced_words(self, form: NormalForm) -> frozenset[Word]:
        return _rewriter(self.matrix).reduced_words(form)

    def right_descents(self, form: NormalForm) -> frozenset[int]:
        return _rewriter(self.matrix).descents(form)[1]

    def left_descents(self, form: NormalForm) -> frozenset[int]:
        return _rewriter(self.matrix).descents(form)[0]

    def is_right_descent(self, form: NormalForm, s: int) -> bool:
        return s in self.right_descents(form)

    def is_left_descent(self, form: NormalForm, s: int) -> bool:
        return s in self.left_descents(form)

    def __str__(self):
        return self.name or f"CoxeterSystem(rank={self.rank})"


def _is_infinite(value) -> bool:
    if isinstance(value, str):
        return value.strip().lower() in ("inf", "infinity", "oo")
    return value == float("inf")


def _directives(text: str):
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if line:
            yield lineno, line.split()


class _BraidRewriter:
    """Memoized braid-orbit search for one Coxeter matrix; safe across threads."""

    def __init__(self, matrix: tuple[tuple[int, ...], ...]):
        self.matrix = matrix
        self._orbits: dict[NormalForm, frozenset[Word]] = {(): frozenset({()})}
        self._descents: dict[NormalForm, tuple[frozenset[int], frozenset[int]]] = {}
        self._products: dict[tuple[NormalForm, int], NormalForm] = {}
        self._lock = threading.RLock()

    def _neighbours(self, word: Word):
        n = len(word)
        for i in range(n - 1):
            a, b = word[i], word[i + 1]
            if a == b:
                continue
            m = self.matrix[a][b]
            if m == INF or i + m > n:
                continue
            if all(word[i + k] == (a, b)[k % 2] for k in range(m)):
                yield word[:i] + tuple((b, a)[k % 2] for k in range(m)) + word[i + m :]

    def _register(self, reduced: Word) -> NormalForm:
        seen, stack = {reduced}, [reduced]
        while stack:
            for other in self._neighbours(stack.pop()):
                if other not in seen:
                    seen.add(other)
                    stack.append(other)
        form = min(seen)
        self._orbits.setdefault(form, frozenset(seen))
        return form

    def reduced_words(self, form: NormalForm) -> frozenset[Word]:
        with self._lock:
            if form not in self._orbits:
                self._register(form)
            return self._orbits[form]

    def descents(self, form: NormalForm) -> tuple[frozenset[int], frozenset[int]]:
        with self._lock:
            cached = self._descents.get(form)
            if cached is None:
                words = self.reduced_words(form)
                cached = (frozenset(w[0] for w in words if w), frozenset(w[-1] for w in words if w))
                self._descents[form] = cached
            return cached

    def times_generator(self, form: NormalForm, s: int) -> NormalForm:
        key = (form, s)
        with self._lock:
            cached = self._products.get(key)
            if cached is not None:
                return cached
            if s in self.descents(form)[1]:
                ending = next(w for w in self.reduced_words(form) if w[-1] == s)
                cached = self._register(ending[:-1])
            else:
                cached = self._register(form + (s,))
            self._products[key] = cached
            return cached


@lru_cache(maxsize=64)
def _rewriter(matrix: tuple[tuple[int, ...], ...]) -> _BraidRewriter:
    LOG.debug(f"New braid rewriter for a rank {len(matrix)} system")
    return _BraidRewriter(matrix)
