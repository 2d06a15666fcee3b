import logging
from abc import ABCMeta, abstractmethod
from dataclasses import dataclass
from functools import cached_property
from itertools import product
from random import Random
from typing import Dict, Iterator, List, Optional, Sequence, Tuple, Type

from .generators import (
    make_rng,
    random_field,
    random_graded_matrix,
    random_spo_matrix,
    random_superfunction,
)
from ..contact.context import ContactContext
from ..contact.hamiltonian import (
    contact_field,
    frame_decomposition,
    frame_recompose,
    hamiltonian_of,
    is_contact,
    lagrange_bracket,
    quadratic_basis,
    quadratic_coordinates,
    quadratic_dim,
)
from ..embedding.golden import expected_hamiltonian
from ..embedding.projective import CoordMap, embed_spo, normalize_rep, projective_embed
from ..fields.forms import form_eval
from ..fields.vector_fields import SuperVectorField
from ..grassmann.dims import Dims, Z
from ..grassmann.expressions import parse_expr
from ..grassmann.superfunction import Monomial, Superfunction
from ..spo.basis import SpoBasisLabel, spo_basis, spo_dim
from ..spo.matrix import GradedMatrix, mat_bracket
from ..spo.omega import OmegaStructure, is_spo_blocks, preserves_omega
from ..spo.rank import rank

logger = logging.getLogger()

# Above this many pairs the vector-field level sweeps sample random pairs.
EXHAUSTIVE_PAIR_LIMIT = 400


def _sign(*parities: int) -> int:
    return -1 if sum(parities) % 2 else 1


@dataclass
class SuiteState:
    """Shared, lazily computed objects for one suite run."""

    dims: Dims
    ctx: ContactContext
    seed: int
    random_cases: int
    matrix_samples: int

    @cached_property
    def basis(self) -> Tuple[Tuple[SpoBasisLabel, GradedMatrix], ...]:
        return spo_basis(self.dims)

    @cached_property
    def embedded(self) -> List[SuperVectorField]:
        return [embed_spo(self.ctx, matrix) for _, matrix in self.basis]

    @cached_property
    def phi(self) -> List[Superfunction]:
        return [form_eval(self.ctx.alpha, field) for field in self.embedded]

    @cached_property
    def monomials(self) -> Tuple[Superfunction, ...]:
        return quadratic_basis(self.dims)

    @cached_property
    def monomial_fields(self) -> List[SuperVectorField]:
        return [contact_field(self.ctx, f) for f in self.monomials]

    @cached_property
    def lagrange_table(self) -> Dict[Tuple[int, int], Superfunction]:
        return {
            (a, b): lagrange_bracket(self.ctx, f, g)
            for (a, f), (b, g) in product(enumerate(self.monomials), repeat=2)
        }

    def embed(self, matrix: GradedMatrix) -> SuperVectorField:
        """Projective embedding without the spo membership test."""
        return projective_embed(normalize_rep(matrix), CoordMap(self.dims))

    def pairs(self, size: int, rng: Random) -> Iterator[Tuple[int, int]]:
        if size * size <= EXHAUSTIVE_PAIR_LIMIT:
            yield from product(range(size), repeat=2)
            return
        for _ in range(self.random_cases):
            yield rng.randrange(size), rng.randrange(size)


# Filled in by CheckMeta, in definition order
_checks = {}


def get_checks() -> List[Type['Check']]:
    return list(_checks.values())


class CheckMeta(ABCMeta):
    def __new__(mcls, name, bases, namespace, **kwargs):
        cls = super().__new__(mcls, name, bases, namespace, **kwargs)

        if name != 'Check':
            if cls.check_name is None:
                raise TypeError(f'Expected check_name defined for {name}')
            _checks[cls.check_name] = cls

        return cls


class Check(metaclass=CheckMeta):
    check_name: str = None

    def __init__(self, state: SuiteState):
        self.state = state
        self.dims = state.dims
        self.ctx = state.ctx
        self.rng = make_rng(state.seed, self.check_name)

    @abstractmethod
    def find_counterexample(self) -> Optional[str]:
        """Describe the first failing case, or return None if the check holds."""

    def random_function(self, max_degree=2, parity=None) -> Superfunction:
        if parity is None:
            parity = self.rng.randint(0, 1)
        return random_superfunction(self.rng, self.dims, max_degree, parity)

    def random_field(self, parity=None) -> Tuple[int, SuperVectorField]:
        if parity is None:
            parity = self.rng.randint(0, 1)
        return parity, random_field(self.rng, self.dims, parity)


class Supercommutativity(Check):
    check_name = 'grassmann.supercommutativity'

    def find_counterexample(self):
        for _ in range(self.state.random_cases):
            f, g = self.random_function(3), self.random_function(3)
            if f * g != (g * f).scale(_sign(f.parity * g.parity)):
                return f'f = {f}, g = {g}: fg = {f * g}, gf = {g * f}'


class Associativity(Check):
    check_name = 'grassmann.associativity'

    def find_counterexample(self):
        for _ in range(self.state.random_cases):
            f, g, h = (self.random_function(2) for _ in range(3))
            if (f * g) * h != f * (g * h):
                return f'f = {f}, g = {g}, h = {h}'


class DerivativeCommutation(Check):
    check_name = 'grassmann.derivatives'

    def find_counterexample(self):
        coords = self.dims.coords
        for _ in range(self.state.random_cases):
            f = self.random_function(3)
            a, b = self.rng.choice(coords), self.rng.choice(coords)
            left = f.derivative(b).derivative(a)
            right = f.derivative(a).derivative(b).scale(_sign(a.parity * b.parity))
            if left != right:
                return f'f = {f}: d/d{a} d/d{b} f = {left}, expected {right}'


class ExpressionRoundTrip(Check):
    check_name = 'grassmann.round-trip'

    def find_counterexample(self):
        for _ in range(self.state.random_cases):
            f = random_superfunction(self.rng, self.dims, 3, max_terms=6)
            text = str(f)
            if parse_expr(text, self.dims) != f:
                return f'{text!r} parses to {parse_expr(text, self.dims)}'


def transposition_sign(word: Sequence[int]) -> int:
    """Sign of the bubble sort of ``word``; 0 when an index repeats."""
    word = list(word)
    if len(set(word)) != len(word):
        return 0
    sign = 1
    for end in range(len(word) - 1, 0, -1):
        for k in range(end):
            if word[k] > word[k + 1]:
                word[k], word[k + 1] = word[k + 1], word[k]
                sign = -sign
    return sign


class GrassmannOracle(Check):
    check_name = 'grassmann.oracle'

    def words(self) -> Iterator[Tuple[Tuple[int, ...], Tuple[int, ...]]]:
        n = self.dims.n
        if n <= 3:
            all_words = [
                tuple(j for j, bit in zip(range(1, n + 1), mask) if bit)
                for mask in product((0, 1), repeat=n)
            ]
            yield from product(all_words, repeat=2)
            return
        for _ in range(self.state.random_cases):
            yield tuple(
                tuple(sorted(self.rng.sample(range(1, n + 1), self.rng.randint(0, n))))
                for _ in range(2)
            )

    def word(self, odds: Tuple[int, ...], coeff: int = 1) -> Superfunction:
        monomial = Monomial((0,) * self.dims.even_count, odds)
        return Superfunction(self.dims, {monomial: coeff})

    def find_counterexample(self):
        for left, right in self.words():
            actual = self.word(left) * self.word(right)
            sign = transposition_sign(left + right)
            expected = self.word(tuple(sorted(left + right)), sign) if sign else 0
            if actual != expected:
                return f'{left} * {right} = {actual}, expected {expected}'


class Leibniz(Check):
    check_name = 'fields.leibniz'

    def find_counterexample(self):
        for _ in range(self.state.random_cases):
            parity, x = self.random_field()
            f, g = self.random_function(), self.random_function()
            expected = x(f) * g + (f * x(g)).scale(_sign(parity * f.parity))
            if x(f * g) != expected:
                return f'X = {x}, f = {f}, g = {g}'


class FieldAntisymmetry(Check):
    check_name = 'fields.antisymmetry'

    def find_counterexample(self):
        for _ in range(self.state.random_cases):
            (px, x), (py, y) = self.random_field(), self.random_field()
            if x.bracket(y) != -y.bracket(x).scale(_sign(px * py)):
                return f'X = {x}, Y = {y}'


class FieldJacobi(Check):
    check_name = 'fields.jacobi'

    def find_counterexample(self):
        for _ in range(self.state.random_cases):
            (px, x), (py, y), (pz, z) = (self.random_field() for _ in range(3))
            total = (
                x.bracket(y.bracket(z)).scale(_sign(px * pz))
                + y.bracket(z.bracket(x)).scale(_sign(py * px))
                + z.bracket(x.bracket(y)).scale(_sign(pz * py))
            )
            if total:
                return f'X = {x}, Y = {y}, Z = {z}: Jacobi sum = {total}'


class BracketCommutator(Check):
    check_name = 'fields.bracket-commutator'

    def find_counterexample(self):
        for _ in range(self.state.random_cases):
            (px, x), (py, y) = self.random_field(), self.random_field()
            f = random_superfunction(self.rng, self.dims, 3)
            expected = x(y(f)) - y(x(f)).scale(_sign(px * py))
            if x.bracket(y)(f) != expected:
                return f'X = {x}, Y = {y}, f = {f}'


class ReebAndFrame(Check):
    check_name = 'contact.frame'

    def find_counterexample(self):
        ctx = self.ctx
        if ctx.reeb != SuperVectorField.partial(self.dims, Z):
            return f'T_0 = {ctx.reeb}, expected d/dz'
        if form_eval(ctx.alpha, ctx.reeb) != 1:
            return f'alpha(T_0) = {form_eval(ctx.alpha, ctx.reeb)}'
        for r in ctx.indices:
            value = form_eval(ctx.alpha, ctx.t(r))
            if value:
                return f'alpha(T_{r}) = {value}'
            bracket = ctx.reeb.bracket(ctx.t(r))
            if bracket:
                return f'[T_0, T_{r}] = {bracket}'


class FrameRelations(Check):
    check_name = 'contact.tangdist'

    def find_counterexample(self):
        ctx = self.ctx
        z = ctx.q(0)
        for r in ctx.indices:
            t_r = ctx.t(r)
            # -omega_{kr} q^k
            t_z = Superfunction.zero(self.dims)
            for k in ctx.indices:
                t_z = t_z - ctx.q(k).scale(ctx.lower(k, r))
            for k in ctx.indices:
                if t_r(ctx.q(k)) != (1 if r == k else 0):
                    return f'T_{r}(q^{k}) = {t_r(ctx.q(k))}'
            if t_r(z) != t_z:
                return f'T_{r}(z) = {t_r(z)}, expected {t_z}'
            if t_r(z * z) != (z * t_z).scale(2):
                return f'T_{r}(z^2) = {t_r(z * z)}, expected {(z * t_z).scale(2)}'
            for j in ctx.indices:
                expected = ctx.reeb.scale(-2 * ctx.lower(r, j))
                if t_r.bracket(ctx.t(j)) != expected:
                    actual = t_r.bracket(ctx.t(j))
                    return f'[T_{r}, T_{j}] = {actual}, expected {expected}'


class ContactFields(Check):
    check_name = 'contact.contact-fields'

    def find_counterexample(self):
        for _ in range(self.state.random_cases):
            f = random_superfunction(self.rng, self.dims, 2)
            field = contact_field(self.ctx, f)
            if not is_contact(self.ctx, field):
                return f'X_f is not contact for f = {f}: X_f = {field}'
            recovered = hamiltonian_of(self.ctx, field)
            if recovered != f:
                return f'alpha(X_f) = {recovered}, expected f = {f}'
            if contact_field(self.ctx, recovered) != field:
                return f'X_(alpha(X)) != X for X = {field}'


class ContactCondition(Check):
    check_name = 'contact.contact-condition'

    def find_counterexample(self):
        ctx = self.ctx
        for _ in range(self.state.random_cases):
            parity, field = self.random_field()
            h, coeffs = frame_decomposition(ctx, field)
            if frame_recompose(ctx, h, coeffs) != field:
                return f'frame decomposition of {field} does not recompose'
            j = self.rng.choice(ctx.indices)
            expected = -ctx.t(j)(h).scale(_sign(parity * ctx.parity(j)))
            for i, g in zip(ctx.indices, coeffs):
                expected = expected - g.scale(2 * ctx.lower(i, j))
            actual = form_eval(ctx.alpha, field.bracket(ctx.t(j)))
            if actual != expected:
                return f'X = {field}: alpha([X, T_{j}]) = {actual}, expected {expected}'


class LagrangeHomomorphism(Check):
    check_name = 'contact.lagrange-homomorphism'

    def find_counterexample(self):
        state = self.state
        for a, b in state.pairs(len(state.monomials), self.rng):
            bracket = state.monomial_fields[a].bracket(state.monomial_fields[b])
            expected = contact_field(self.ctx, state.lagrange_table[a, b])
            if bracket != expected:
                f, g = state.monomials[a], state.monomials[b]
                return f'f = {f}, g = {g}: [X_f, X_g] = {bracket}, X_(f,g) = {expected}'


class DegreeClosure(Check):
    check_name = 'contact.degree-closure'

    def find_counterexample(self):
        for (a, b), value in self.state.lagrange_table.items():
            if value.degree() > 2:
                f, g = self.state.monomials[a], self.state.monomials[b]
                return f'{{{f}, {g}}} = {value} has degree {value.degree()}'


class LagrangeAntisymmetry(Check):
    check_name = 'contact.lagrange-antisymmetry'

    def find_counterexample(self):
        monomials, table = self.state.monomials, self.state.lagrange_table
        for (a, b), value in table.items():
            sign = _sign(monomials[a].parity * monomials[b].parity)
            if value != -table[b, a].scale(sign):
                return f'{{{monomials[a]}, {monomials[b]}}} = {value}'


class LagrangeJacobi(Check):
    check_name = 'contact.lagrange-jacobi'

    def find_counterexample(self):
        monomials = self.state.monomials
        for _ in range(self.state.random_cases):
            f, g, h = (self.rng.choice(monomials) for _ in range(3))
            pf, pg, ph = f.parity, g.parity, h.parity

            def br(u, v):
                return lagrange_bracket(self.ctx, u, v)

            total = (
                br(f, br(g, h)).scale(_sign(pf * ph))
                + br(g, br(h, f)).scale(_sign(pg * pf))
                + br(h, br(f, g)).scale(_sign(ph * pg))
            )
            if total:
                return f'f = {f}, g = {g}, h = {h}: Jacobi sum = {total}'


class OmegaAgreement(Check):
    check_name = 'spo.omega-agreement'

    def sample(self, k: int) -> GradedMatrix:
        kind = k % 3
        if kind == 0:
            return random_spo_matrix(self.rng, self.dims)
        if kind == 1:
            size = self.state.basis[0][1].size
            perturbation = GradedMatrix.unit(
                self.dims, self.rng.randint(1, size), self.rng.randint(1, size)
            )
            return random_spo_matrix(self.rng, self.dims) + perturbation
        return random_graded_matrix(self.rng, self.dims)

    def find_counterexample(self):
        omega = OmegaStructure(self.dims)
        for k in range(self.state.matrix_samples):
            matrix = self.sample(k)
            if preserves_omega(omega, matrix) != is_spo_blocks(matrix):
                return f'criteria disagree on {matrix!r}'


class BasisMembership(Check):
    check_name = 'spo.basis-membership'

    def find_counterexample(self):
        omega = OmegaStructure(self.dims)
        if len(self.state.basis) != spo_dim(self.dims):
            count = len(self.state.basis)
            return f'{count} basis elements, expected {spo_dim(self.dims)}'
        for label, matrix in self.state.basis:
            if not (preserves_omega(omega, matrix) and is_spo_blocks(matrix)):
                return f'{label} is not in spo'


class BasisRank(Check):
    check_name = 'spo.basis-rank'

    def find_counterexample(self):
        value = rank([matrix.flatten() for _, matrix in self.state.basis])
        if value != spo_dim(self.dims):
            return f'basis rank {value}, expected {spo_dim(self.dims)}'


class BracketClosure(Check):
    check_name = 'spo.closure'

    def find_counterexample(self):
        basis = self.state.basis
        for a, b in self.state.pairs(len(basis), self.rng):
            if not is_spo_blocks(mat_bracket(basis[a][1], basis[b][1])):
                return f'[{basis[a][0]}, {basis[b][0]}] is not in spo'


class MatrixJacobi(Check):
    check_name = 'spo.jacobi'

    def find_counterexample(self):
        for _ in range(self.state.random_cases):
            parities = [self.rng.randint(0, 1) for _ in range(3)]
            x, y, z = (random_graded_matrix(self.rng, self.dims, p) for p in parities)
            px, py, pz = parities
            total = (
                mat_bracket(x, mat_bracket(y, z)) * _sign(px * pz)
                + mat_bracket(y, mat_bracket(z, x)) * _sign(py * px)
                + mat_bracket(z, mat_bracket(x, y)) * _sign(pz * py)
            )
            if total:
                return f'A = {x!r}, B = {y!r}, C = {z!r}'


class IdentityExclusion(Check):
    check_name = 'spo.identity-exclusion'

    def find_counterexample(self):
        identity = GradedMatrix.identity(self.dims)
        omega = OmegaStructure(self.dims)
        if preserves_omega(omega, identity) or is_spo_blocks(identity):
            return 'the identity matrix preserves omega'
        field = projective_embed(normalize_rep(identity), CoordMap(self.dims))
        if field:
            return f'the identity embeds as {field}'


class GoldenTable(Check):
    check_name = 'embedding.golden-table'

    def find_counterexample(self):
        for (label, _), field, value in zip(
            self.state.basis, self.state.embedded, self.state.phi
        ):
            expected = expected_hamiltonian(self.dims, label)
            if value != expected:
                return f'{label}: Hamiltonian {value}, expected {expected}'
            if field != contact_field(self.ctx, expected):
                return f'{label}: field {field}, expected X_({expected})'


class Contactness(Check):
    check_name = 'embedding.contactness'

    def find_counterexample(self):
        for (label, _), field in zip(self.state.basis, self.state.embedded):
            if not is_contact(self.ctx, field):
                return f'{label} embeds as non-contact field {field}'


class EmbeddingHomomorphism(Check):
    check_name = 'embedding.homomorphism'

    def find_counterexample(self):
        basis, embedded = self.state.basis, self.state.embedded
        for a, b in self.state.pairs(len(basis), self.rng):
            left = self.state.embed(mat_bracket(basis[a][1], basis[b][1]))
            right = embedded[a].bracket(embedded[b])
            if left != right:
                return (
                    f'[{basis[a][0]}, {basis[b][0]}] embeds as {left}, '
                    f'bracket is {right}'
                )


class Isomorphism(Check):
    check_name = 'embedding.isomorphism'

    def find_counterexample(self):
        basis, phi = self.state.basis, self.state.phi
        for a, b in product(range(len(basis)), repeat=2):
            field = self.state.embed(mat_bracket(basis[a][1], basis[b][1]))
            left = form_eval(self.ctx.alpha, field)
            right = lagrange_bracket(self.ctx, phi[a], phi[b])
            if left != right:
                return f'phi([{basis[a][0]}, {basis[b][0]}]) = {left}, expected {right}'

        value = rank([quadratic_coordinates(f) for f in phi])
        expected = {spo_dim(self.dims), quadratic_dim(self.dims)}
        if expected != {value}:
            return f'phi-image rank {value}, expected {spo_dim(self.dims)}'


class ScalarInvariance(Check):
    check_name = 'embedding.scalar-invariance'

    def find_counterexample(self):
        cmap = CoordMap(self.dims)
        identity = GradedMatrix.identity(self.dims)
        for _ in range(self.state.random_cases):
            matrix = random_spo_matrix(self.rng, self.dims)
            shift = self.rng.randint(-5, 5)
            shifted = projective_embed(normalize_rep(matrix + identity * shift), cmap)
            if shifted != embed_spo(self.ctx, matrix):
                return f'A = {matrix!r}, c = {shift}'
