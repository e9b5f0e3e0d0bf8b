"""Packed integer monomial keys.

A monomial is stored as a single Python int laid out in 16-bit fields so
that native integer comparison realizes the monomial order.  Multiplication
is a single add (plus a constant correction), and divisibility is one
SWAR-style subtraction with per-field guard bits.

Field layout constraints: every exponent must stay below OFFSET (2**14)
and every total degree below 2**16.  Desk-scale inputs (degree <= 13,
products up to degree ~60) sit far inside these bounds.
"""

from __future__ import annotations

FIELD_BITS = 16
FIELD_MASK = (1 << FIELD_BITS) - 1
OFFSET = 1 << 14          # complement base for reverse-lex fields
GUARD = 1 << 15           # guard bit inside each 16-bit field


class GrevlexSchema:
    """Keys whose natural int order is graded reverse lexicographic.

    Layout, low bits to high: [OFFSET-e_0][OFFSET-e_1]...[OFFSET-e_{n-1}][deg].
    Comparing ints compares total degree first, then finds the highest-index
    differing exponent, where the smaller exponent wins: exactly grevlex.
    """

    __slots__ = ("nvars", "deg_shift", "zero_key", "guard_mask", "var_keys",
                 "mul_deltas", "name")

    name = "grevlex"

    def __init__(self, nvars: int):
        self.nvars = nvars
        self.deg_shift = FIELD_BITS * nvars
        zk = 0
        gm = 0
        for i in range(nvars):
            zk |= OFFSET << (FIELD_BITS * i)
            gm |= GUARD << (FIELD_BITS * i)
        self.zero_key = zk
        self.guard_mask = gm
        self.var_keys = tuple(
            self.encode(tuple(1 if j == i else 0 for j in range(nvars)))
            for i in range(nvars)
        )
        # add one of these to a key to multiply by the corresponding variable
        self.mul_deltas = tuple(vk - zk for vk in self.var_keys)

    def encode(self, exps) -> int:
        k = sum(exps) << self.deg_shift
        for i, e in enumerate(exps):
            k |= (OFFSET - e) << (FIELD_BITS * i)
        return k

    def decode(self, key: int):
        return tuple(
            OFFSET - ((key >> (FIELD_BITS * i)) & FIELD_MASK)
            for i in range(self.nvars)
        )

    def total_degree(self, key: int) -> int:
        return key >> self.deg_shift

    def exponent(self, key: int, i: int) -> int:
        return OFFSET - ((key >> (FIELD_BITS * i)) & FIELD_MASK)

    def mul(self, k1: int, k2: int) -> int:
        return k1 + k2 - self.zero_key

    def div(self, k1: int, k2: int) -> int:
        # exact division; caller guarantees divisibility
        return k1 - k2 + self.zero_key

    def divides(self, kb: int, ka: int) -> bool:
        # does monomial b divide monomial a
        g = self.guard_mask
        return ((kb | g) - ka) & g == g

    def lcm(self, k1: int, k2: int) -> int:
        e1 = self.decode(k1)
        e2 = self.decode(k2)
        return self.encode(tuple(a if a >= b else b for a, b in zip(e1, e2)))

    def coprime(self, k1: int, k2: int) -> bool:
        e1 = self.decode(k1)
        e2 = self.decode(k2)
        return all(a == 0 or b == 0 for a, b in zip(e1, e2))


class LexSchema:
    """Pure lexicographic keys with x_0 highest."""

    __slots__ = ("nvars", "zero_key", "guard_mask", "var_keys", "mul_deltas",
                 "name")

    name = "lex"

    def __init__(self, nvars: int):
        self.nvars = nvars
        self.zero_key = 0
        gm = 0
        for i in range(nvars):
            gm |= GUARD << (FIELD_BITS * i)
        self.guard_mask = gm
        self.var_keys = tuple(
            self.encode(tuple(1 if j == i else 0 for j in range(nvars)))
            for i in range(nvars)
        )
        self.mul_deltas = tuple(self.var_keys)

    def encode(self, exps) -> int:
        k = 0
        n = self.nvars
        for i, e in enumerate(exps):
            k |= e << (FIELD_BITS * (n - 1 - i))
        return k

    def decode(self, key: int):
        n = self.nvars
        return tuple(
            (key >> (FIELD_BITS * (n - 1 - i))) & FIELD_MASK
            for i in range(n)
        )

    def total_degree(self, key: int) -> int:
        return sum(self.decode(key))

    def exponent(self, key: int, i: int) -> int:
        return (key >> (FIELD_BITS * (self.nvars - 1 - i))) & FIELD_MASK

    def mul(self, k1: int, k2: int) -> int:
        return k1 + k2

    def div(self, k1: int, k2: int) -> int:
        return k1 - k2

    def divides(self, kb: int, ka: int) -> bool:
        g = self.guard_mask
        return ((ka | g) - kb) & g == g

    def lcm(self, k1: int, k2: int) -> int:
        e1 = self.decode(k1)
        e2 = self.decode(k2)
        return self.encode(tuple(a if a >= b else b for a, b in zip(e1, e2)))

    def coprime(self, k1: int, k2: int) -> bool:
        e1 = self.decode(k1)
        e2 = self.decode(k2)
        return all(a == 0 or b == 0 for a, b in zip(e1, e2))


class ElimSchema:
    """Block elimination order: grevlex on x_0..x_{split-1} over grevlex on
    the rest.  Any monomial containing a block-one variable beats every
    monomial in the tail block."""

    __slots__ = ("nvars", "split", "zero_key", "guard_mask", "var_keys",
                 "mul_deltas", "name", "_lo_deg_shift", "_hi_deg_shift")

    def __init__(self, nvars: int, split: int):
        if not 0 < split < nvars:
            raise ValueError("split must cut the variables into two blocks")
        self.nvars = nvars
        self.split = split
        self.name = f"elim{split}"
        lo_vars = nvars - split
        # low section: [OFFSET-e_split .. OFFSET-e_{n-1}][deg_lo]
        # high section: [OFFSET-e_0 .. OFFSET-e_{split-1}][deg_hi]
        self._lo_deg_shift = FIELD_BITS * lo_vars
        self._hi_deg_shift = FIELD_BITS * (lo_vars + 1 + split)
        zk = 0
        gm = 0
        for pos in range(nvars + 2):
            if pos == lo_vars or pos == nvars + 1:
                continue  # degree fields carry no offset
            zk |= OFFSET << (FIELD_BITS * pos)
        for pos in range(nvars + 1):
            # guard every field below the top one, degree fields included,
            # so borrows never cross into a neighbouring field
            gm |= GUARD << (FIELD_BITS * pos)
        self.zero_key = zk
        self.guard_mask = gm
        self.var_keys = tuple(
            self.encode(tuple(1 if j == i else 0 for j in range(nvars)))
            for i in range(nvars)
        )
        self.mul_deltas = tuple(vk - zk for vk in self.var_keys)

    def _field_pos(self, i: int) -> int:
        lo_vars = self.nvars - self.split
        if i < self.split:
            return lo_vars + 1 + i
        return i - self.split

    def encode(self, exps) -> int:
        hi = sum(exps[: self.split])
        lo = sum(exps[self.split:])
        k = (hi << self._hi_deg_shift) | (lo << self._lo_deg_shift)
        for i, e in enumerate(exps):
            k |= (OFFSET - e) << (FIELD_BITS * self._field_pos(i))
        return k

    def decode(self, key: int):
        return tuple(
            OFFSET - ((key >> (FIELD_BITS * self._field_pos(i))) & FIELD_MASK)
            for i in range(self.nvars)
        )

    def total_degree(self, key: int) -> int:
        hi = key >> self._hi_deg_shift
        lo = (key >> self._lo_deg_shift) & FIELD_MASK
        return hi + lo

    def exponent(self, key: int, i: int) -> int:
        return OFFSET - ((key >> (FIELD_BITS * self._field_pos(i))) & FIELD_MASK)

    def mul(self, k1: int, k2: int) -> int:
        return k1 + k2 - self.zero_key

    def div(self, k1: int, k2: int) -> int:
        return k1 - k2 + self.zero_key

    def divides(self, kb: int, ka: int) -> bool:
        # offset fields want kb >= ka fieldwise; guards absorb the degree
        # fields (where kb <= ka), so only offset-field guards are checked
        g = self.guard_mask
        lo_vars = self.nvars - self.split
        check = g & ~(GUARD << (FIELD_BITS * lo_vars))
        return ((kb | g) - ka) & check == check

    def lcm(self, k1: int, k2: int) -> int:
        e1 = self.decode(k1)
        e2 = self.decode(k2)
        return self.encode(tuple(a if a >= b else b for a, b in zip(e1, e2)))

    def coprime(self, k1: int, k2: int) -> bool:
        e1 = self.decode(k1)
        e2 = self.decode(k2)
        return all(a == 0 or b == 0 for a, b in zip(e1, e2))


def schema_for(nvars: int, order: str):
    if order == "grevlex":
        return GrevlexSchema(nvars)
    if order == "lex":
        return LexSchema(nvars)
    if order.startswith("elim"):
        return ElimSchema(nvars, int(order[4:]))
    raise ValueError(f"unknown monomial order {order!r}")


class ModuleOrder:
    """Term-over-position keys for free-module elements.

    A term in component c with monomial key m becomes
    ``(m << compbits) | (compmask - c)``: ints compare by monomial first,
    lower components breaking ties upward.
    """

    __slots__ = ("schema", "ncomp", "shifts", "compbits", "compmask",
                 "stride_shift")

    def __init__(self, schema, ncomp: int, shifts=None):
        self.schema = schema
        self.ncomp = ncomp
        self.shifts = tuple(shifts) if shifts is not None else (0,) * ncomp
        self.compbits = max(1, (ncomp - 1).bit_length())
        self.compmask = (1 << self.compbits) - 1
        self.stride_shift = self.compbits

    def encode(self, comp: int, monkey: int) -> int:
        return (monkey << self.compbits) | (self.compmask - comp)

    def component(self, key: int) -> int:
        return self.compmask - (key & self.compmask)

    def monkey(self, key: int) -> int:
        return key >> self.compbits

    def term_delta(self, key: int, lead: int) -> int:
        # additive delta turning terms of the reducer into terms aligned at key
        return key - lead

    def mul_delta(self, quot_monkey: int) -> int:
        return (quot_monkey - self.schema.zero_key) << self.compbits

    def divides(self, kb: int, ka: int) -> bool:
        if (kb ^ ka) & self.compmask:
            return False
        return self.schema.divides(kb >> self.compbits, ka >> self.compbits)

    def term_degree(self, key: int) -> int:
        return (self.schema.total_degree(key >> self.compbits)
                + self.shifts[self.compmask - (key & self.compmask)])


class PositionOrder(ModuleOrder):
    """Position-over-term keys: higher components dominate (elimination)."""

    __slots__ = ("monbits",)

    def __init__(self, schema, ncomp: int, shifts=None):
        super().__init__(schema, ncomp, shifts)
        # monomial keys fit in (nvars + 2) 16-bit fields for every schema
        self.monbits = FIELD_BITS * (schema.nvars + 2)

    def encode(self, comp: int, monkey: int) -> int:
        return (comp << self.monbits) | monkey

    def component(self, key: int) -> int:
        return key >> self.monbits

    def monkey(self, key: int) -> int:
        return key & ((1 << self.monbits) - 1)

    def mul_delta(self, quot_monkey: int) -> int:
        return quot_monkey - self.schema.zero_key

    def divides(self, kb: int, ka: int) -> bool:
        if (kb >> self.monbits) != (ka >> self.monbits):
            return False
        mask = (1 << self.monbits) - 1
        return self.schema.divides(kb & mask, ka & mask)

    def term_degree(self, key: int) -> int:
        return (self.schema.total_degree(key & ((1 << self.monbits) - 1))
                + self.shifts[key >> self.monbits])
