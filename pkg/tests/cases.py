"""Reference coverings (exponents -> Z = psi(X)) and identities used across the suites."""

from fractions import Fraction
from functools import lru_cache

from hypklein.klein import compute_covering
from hypklein.polyalg import ratfunc_from_text

TETRA_BASIC = {
    "1/2,1/3,2/3": ("27*X/(4*X-1)^3", -27),
    "1/2,2/3,2/3": ("-X^2*(4*X-5)^3/(5*X-4)^3", -2),
    "3/2,1/3,1/3": ("-X*(X^2-42*X-7)^3/(7*X^2+42*X-1)^3", -1),
}

TETRA_HIGHER = {
    "1/2,1/3,4/3": "-X*(256*X^2-448*X+189)^3/(27*(28*X-27)^3)",
    "1/2,2/3,4/3": "19683*X^2*(4*X-1)^3/(256*X^3-192*X^2+21*X-4)^3",
    "1/2,1/3,5/3": "-19683*X*(128*X-125)^3/(16384*X^3-30720*X^2+14880*X-625)^3",
    "3/2,1/3,2/3": "-729*X*(5*X^2+14*X+125)^3/(4*X^3+15*X^2-690*X-625)^3",
    "1/3,2/3,5/3": "4*X*(256*X^3-640*X^2+520*X-135)^3/(27*(X-1)^2*(32*X-27)^3)",
    "2/3,2/3,4/3": "-X^2*(X-1)^2*(16*X^2-16*X+5)^3/(4*(5*X^2-5*X+1)^3)",
}

DEG14 = ("2/3,4/3,4/3",
         "-108*X^4*(X-1)^4*(27*X^2-27*X+7)^3/(189*X^4-378*X^3+301*X^2-112*X+16)^3")

ICOSA_11 = ("1/2,2/3,1/5",
            "X*(102400*X^2-11264*X-11)^5/(180224000*X^3+4325376*X^2-21252*X+1)^3")

ICOSA_18 = ("1/5,1/5,6/5",
            "-108*X*(X-1)*(512*X^2-512*X+3)^5/(1048576*X^6-3145728*X^5+3244032*X^4"
            "-1245184*X^3+94848*X^2+3456*X+1)^3")


def all_printed():
    out = {k: v[0] for k, v in TETRA_BASIC.items()}
    out.update(TETRA_HIGHER)
    out[DEG14[0]] = DEG14[1]
    out[ICOSA_11[0]] = ICOSA_11[1]
    out[ICOSA_18[0]] = ICOSA_18[1]
    return out


def triple(text):
    return tuple(Fraction(v) for v in text.split(","))


def psi(text):
    return ratfunc_from_text(text)


@lru_cache(maxsize=None)
def covering(text):
    return compute_covering(triple(text))
