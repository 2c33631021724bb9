"""Printed reference relations, stored verbatim as LaTeX source.

Each entry is ``(name, formula)``.  Formulas may chain several equalities
and use free index letters; :mod:`cartan_commutant.poly_algebra` evaluates
them against recomputed brackets.  Nothing here is trusted: every line is
an input to be checked.
"""

from __future__ import annotations

__all__ = [
    "TABLE3_P",
    "TABLE3_DUPLICATES",
    "FREL",
    "EQUAFIN",
    "CUBIC4",
    "CUBIC4_REPEATS",
    "CUBIC4_REPAIRS",
    "REL1",
    "EQ1_EQU1",
    "C2C3",
    "CAS3",
    "CAS2_SL2",
    "CASK",
    "REAL3_COLLAPSE",
    "COMMUT",
    "REAL4_COLLAPSE",
    "COLLAPSES",
    "OMEGA_PRINTED",
    "REAL3_RACAH",
    "ANTS",
    "REAL4_RACAH",
    "FIJK4R",
    "R4",
]

# n=3, p-basis: lines whose left-hand side is unambiguous
TABLE3_P: list[tuple[str, str]] = [
    ('{p12, p13}', r"\{p_{1,2}, p_{1,3}\} =-\{p_{1,2}, p_{2,3}\}=\{p_{1,3}, p_{2,3}\}=p_{1,2,3}-p_{1,3,2}"),
    ('{p12, p123}', r"\{p_{1,2}, p_{1,2,3}\} =p_{1,2}(p_{1,3}-p_{2,3})-h_1 p_{1,2,3}"),
    ('{p13, p123}', r"\{p_{1,3}, p_{1,2,3}\} =p_{1,3}(p_{2,3}-p_{1,2})+(h_1+h_2) p_{1,2,3}"),
    ('{p23, p123}', r"\{p_{2,3}, p_{1,2,3}\} =p_{2,3}(p_{1,2}-p_{1,3})-h_2 p_{1,2,3}"),
    ('{p12, p132}', r"\{p_{1,2}, p_{1,3,2}\} =-p_{1,2}(p_{1,3}-p_{2,3})+h_1 p_{1,3,2}"),
    ('{p123, p132}', r"\{p_{1,2,3}, p_{1,3,2}\}=h_1 p_{1,3} p_{2,3}+h_2 p_{1,2} p_{1,3}-(h_1+h_2)p_{1,2} p_{2,3}"),
]

# n=3, p-basis: two lines repeat an earlier left-hand side with a different
# right-hand side; each is checked as printed and with p_{1,3,2} in the
# second slot
TABLE3_DUPLICATES: list[tuple[str, str, str]] = [
    ('{p13, p123}', r"\{p_{1,3}, p_{1,2,3}\} =-p_{1,3}(p_{2,3}-p_{1,2})-(h_1+h_2) p_{1,3,2}", r"\{p_{1,3}, p_{1,3,2}\} =-p_{1,3}(p_{2,3}-p_{1,2})-(h_1+h_2) p_{1,3,2}"),
    ('{p23, p123}', r"\{p_{2,3}, p_{1,2,3}\} =-p_{2,3}(p_{1,2}-p_{1,3})+h_2 p_{1,3,2}", r"\{p_{2,3}, p_{1,3,2}\} =-p_{2,3}(p_{1,2}-p_{1,3})+h_2 p_{1,3,2}"),
]

# n=3, c/f/g basis
FREL: list[tuple[str, str]] = [
    ('{c12, c23}', r"\{c_{12},c_{23}\} =\{c_{23},c_{13}\}=\{c_{13},c_{12}\}=2 f_{123}"),
    ('{c12, f123}', r"\{c_{12}, f_{123}\}=(c_{23}-c_{13})c_{12}+(c_1-c_2)g_{123}"),
    ('{c13, f123}', r"\{c_{13}, f_{123}\}=(c_{12}-c_{23})c_{13}+(c_3-c_1)g_{123}"),
    ('{c23, f123}', r"\{c_{23}, f_{123}\}=(c_{13}-c_{12})c_{23}+(c_2-c_3)g_{123}"),
    ('{c12, g123}', r"\{c_{12}, g_{123}\}=(c_1-c_2)f_{123}"),
    ('{c13, g123}', r"\{c_{13}, g_{123}\}=(c_3-c_1)f_{123}"),
    ('{c23, g123}', r"\{c_{23}, g_{123}\}=(c_2-c_3)f_{123}"),
    ('{f123, g123}', r"\{f_{123},g_{123}\}=\frac{1}{2}\bigl((c_1-c_3)c_{12}c_{23}+(c_3-c_2)c_{12}c_{13}+(c_2-c_1)c_{13}c_{23}\bigl)"),
]

# n=3, c/f/g basis, free letters i, j, k
EQUAFIN: list[tuple[str, str]] = [
    ('{cij, cjk}', r"\{c_{ij},c_{jk}\}=2 f_{ijk}"),
    ('{cjk, fijk}', r"\{c_{jk},f_{ijk}\}=(c_{ik}-c_{ij})c_{jk}+(c_j-c_k)g_{ijk}"),
    ('{cjk, gijk}', r"\{c_{jk},g_{ijk}\}=(c_j-c_k)f_{ijk}"),
    ('{fijk, gijk}', r"\{f_{ijk},g_{ijk}\}=\frac{1}{2}\bigl((c_i-c_k)c_{ij}c_{jk}+(c_k-c_j)c_{ki}c_{ij}+(c_j-c_i)c_{jk}c_{ki} \bigl)"),
]

# n=4, c/f/g basis, free letters i, j, k, l; exact repeats removed
CUBIC4: list[tuple[str, str]] = [
    ('{cij, ckl}', r"\{c_{ij},c_{kl}\}=0"),
    ('{cij, cjk}', r"\{c_{ij},c_{jk}\}=2 f_{ijk}"),
    ('{cjk, fijk}', r"\{c_{jk},f_{ijk}\}=(c_{ik}-c_{ij})c_{jk}+(c_j-c_k)g_{ijk}"),
    ('{cjk, gijk}', r"\{c_{jk},g_{ijk}\}=(c_j-c_k)f_{ijk}"),
    ('{ckl, fijk}', r"\{c_{kl},f_{ijk}\}=g_{i j l k}-g_{i j k l}"),
    ('{ckl, gijk}', r"\{c_{kl},g_{ijk}\}=f_{i j l k}-f_{i j k l}"),
    ('{fijk, gijk}', r"\{f_{ijk},g_{ijk}\}=\frac{1}{2}\bigl((c_i-c_k)c_{ij}c_{jk}+(c_k-c_j)c_{ki}c_{ij}+(c_j-c_i)c_{jk}c_{ki} \bigl)"),
    ('{fijk, fjkl}', r"\{f_{ijk},f_{jkl}\}=\frac{1}{2}((c_{ij}-c_{ki})f_{jkl}+(c_{kl}-c_{jl})f_{ijk}+(f_{ilj}+f_{ilk})c_{jk}+(c_j-c_k)f_{ijlk})"),
    ('{gijk, gjkl}', r"\{g_{ijk},g_{jkl}\}=\frac{1}{2}((c_{ij}-c_{ki})f_{jkl}+(c_{kl}-c_{jl})f_{ijk}+(f_{ijl}+f_{ikl})c_{jk}+(c_j-c_k)f_{iklj})"),
    ('{fijk, gjkl}', r"\{f_{ijk},g_{jkl}\}=\frac{1}{2}(c_{ij}-c_{ki})g_{jkl}+(c_{kl}-c_{jl})g_{ijk}+(g_{ijl}-g_{ikl})c_{jk}+(c_k-c_j)g_{iklj})"),
    ('{ckl, fijkl}', r"\{c_{kl},f_{ijkl}\}=(g_{ilj}-g_{ikj})c_{kl}+(c_k-c_l)g_{ijkl}"),
    ('{ckl, fijlk}', r"\{c_{kl},f_{ijlk}\}=(g_{ikj}-g_{ilj})c_{kl}+(c_l-c_k)g_{ijlk}"),
    ('{ckl, filjk}', r"\{c_{kl},f_{iljk}\}=(c_{jl}-c_{jk})g_{ikl} + (c_{ik}-c_{il})g_{jkl}"),
    ('{ckl, gijkl}', r"\{c_{kl},g_{ijkl}\}=(f_{ijl}-f_{ijk})c_{kl}+(c_k-c_l)f_{ijkl}"),
    ('{ckl, gijlk}', r"\{c_{kl},g_{ijlk}\}=(f_{ijk}-f_{ijl})c_{kl}+(c_l-c_k)f_{ijlk}"),
    ('{ckl, giljk}', r"\{c_{kl},g_{iljk}\}=(c_{jk}-c_{jl})f_{ikl} +(c_{ik}-c_{il})f_{jkl}"),
    ('{fjkl, fijkl}', r"\{f_{jkl},f_{ijkl}\}=\frac{1}{2}\bigl((c_{jk}-c_{kl})f_{ijkl}+(g_{ikl}-g_{ijk})f_{jkl}+(f_{ikl}-f_{ijk})g_{jkl}+\bigl((c_l-c_k)c_{jk}+(c_k-c_j)c_{kl}\bigl)f_{ijl}\bigl)"),
    ('{fjkl, fijlk}', r"\{f_{jkl},f_{ijlk}\}= \frac{1}{2}\bigl((c_{kl} - c_{jl}) f_{ijlk} + (g_{ikl} - g_{ijl}) f_{jkl}+ (f_{ijl} + f_{ikl}) g_{jkl} + ( (c_j - c_l) c_{kl} + (c_l - c_k) c_{jl}) f_{ijk}\bigl)"),
    ('{fjkl, filjk}', r"\{f_{jkl},f_{iljk}\}=\frac{1}{2}\bigl((c_{jl} - c_{jk}) f_{iljk} + (g_{ijk} - g_{ijl}) f_{jkl}+ (f_{ijk} + f_{ijl}) g_{jkl} + ( (c_j - c_k) c_{jl} + (c_l - c_j) c_{jk}) f_{ikl})"),
    ('{gjkl, gijkl}', r"\{g_{jkl},g_{ijkl}\}=\frac{1}{2}\bigl((c_{jk}-c_{kl})f_{ijkl}+(g_{ikl}-g_{ijk})f_{jkl}+(f_{ikl}-f_{ijk})g_{jkl}+\bigl((c_k-c_l)c_{jk}+(c_j-c_k)c_{kl}\bigl)f_{ijl}\bigl)"),
    ('{gjkl, gijlk}', r"\{g_{jkl},g_{ijlk}\}=\frac{1}{2} \bigl((c_{jl} - c_{kl}) f_{ijlk} + (g_{ijl} - g_{ikl}) f_{jkl} - (f_{ijl} + f_{ikl}) g_{jkl} + ( (c_j - c_l) c_{kl} + (c_l - c_k) c_{jl}) f_{ijk}\bigl)"),
    ('{gjkl, giljk}', r"\{g_{jkl},g_{iljk}\}=\frac{1}{2} \bigl((c_{jl} - c_{jk}) f_{iljk} + (g_{ijk} - g_{ijl})f_{jkl}+ (f_{ijk} + f_{ijl}) g_{jkl} + ( (c_k - c_j) c_{jl} + (c_j - c_l) c_{jk}) f_{ikl})"),
    ('{fjkl, gijkl}', r"\{f_{jkl},g_{ijkl}\}=\frac{1}{2}\left((c_{jk} - c_{kl}) g_{ijkl} + (c_{ij}-c_{il})c_{jk}c_{kl}+(f_{ikl} - f_{ijk})f_{jkl}+ (g_{ikl} - g_{ijk}) g_{jkl} + ( (c_k - c_j) c_{kl} \right. +\left.(c_l - c_k) c_{jk}) g_{ijl}\right)"),
    ('{fjkl, gijlk}', r"\{f_{jkl},g_{ijlk}\}=\frac{1}{2}\left((c_{kl} - c_{jl}) g_{ijlk} + (c_{ik}-c_{ij})c_{jl}c_{kl}-(f_{ijl} + f_{ikl})f_{jkl}+ (g_{ijl} - g_{ikl}) g_{jkl} + ( (c_j - c_l) c_{kl} \right. \left.+ (c_l - c_k) c_{jl}) g_{ijk}\right)"),
    ('{fjkl, giljk}', r"\{f_{jkl},g_{iljk}\}=\frac{1}{2}\left((c_{jl} - c_{jk}) g_{iljk} + (c_{il}-c_{ik})c_{jk}c_{jl}+(f_{ijk} + f_{ijl})f_{jkl}+ (g_{ijk} - g_{ijl}) g_{jkl} + ( (c_j - c_l) c_{jk} \right. \left.+ (c_k - c_l) c_{jl}) g_{ikl}\right)"),
    ('{gjkl, fijkl}', r"\{g_{jkl},f_{ijkl}\}=\frac{1}{2}\left((c_{jk} - c_{kl}) g_{ijkl} + (c_{il}-c_{ij})c_{jk}c_{kl}+(f_{ikl} - f_{ijk})f_{jkl}+ (g_{ikl} - g_{ijk}) g_{jkl} + ( (c_j - c_k) c_{kl} \right. \left. + (c_k - c_l) c_{jk}) g_{ijl}\right)"),
    ('{gjkl, fijlk}', r"\{g_{jkl}, f_{ijlk}\}=\frac{1}{2}\left((c_{jl} - c_{kl}) g_{ijlk} + (c_{ik}-c_{ij})c_{jl}c_{kl}+(f_{ijl} + f_{ikl})f_{jkl}+ (g_{ikl} - g_{ijl}) g_{jkl} + ( (c_j - c_l) c_{kl}\right. \left.+ (c_l - c_k) c_{jl}) g_{ijk}\right)"),
    ('{gjkl, filjk}', r"\{g_{jkl},f_{iljk}\}=\frac{1}{2}\left((c_{jl} - c_{jk}) g_{iljk} + (c_{il}-c_{ik})c_{jk}c_{jl}+(f_{ijk} + f_{ijl})f_{jkl}+ (g_{ijk} - g_{ijl}) g_{jkl} + ( (c_j - c_l) c_{jk} \right. \left.+ (c_k - c_l) c_{jl}) g_{ikl}\right)"),
    ('{fijkl, fijlk}', r"\{f_{ijkl},f_{ijlk}\}=\frac{1}{2}\left( \bigl((c_{jk} + c_{jl} - c_{kl}) f_{ikl} + ( c_{kl}-c_{ik}- c_{il}) f_{jkl}\bigl) c_{ij} + \bigl((c_{ij} - c_{il} - c_{jl} ) f_{ijk} + (c_{ik} + c_{jk} - c_{ij}) f_{ijl}\bigl) c_{kl} \right. \left. + (c_i - c_j) (f_{ikl} g_{jkl}+f_{jkl} g_{ikl} ) + (c_l - c_k) (f_{ijk} g_{ijl}+f_{ijl} g_{ijk} )\right)"),
    ('{fijkl, filjk}', r"\{f_{ijkl},f_{iljk}\}=\frac{1}{2}\left( \bigl((c_{ik} + c_{kl} - c_{il}) f_{ijl} + ( c_{il}-c_{ij}- c_{jl}) f_{ikl}\bigl) c_{jk} + \bigl((c_{jl} + c_{kl} - c_{jk} ) f_{ijk} + (c_{jk} - c_{ij} - c_{ik}) f_{jkl}\bigl) c_{il} \right. \left. + (c_i - c_l) (f_{ijk} g_{jkl}+f_{jkl} g_{ijk} ) + (c_j - c_k) (f_{ikl} g_{ijl}+f_{ijl} g_{ikl} )\right)"),
    ('{fijlk, filjk}', r"\{f_{ijlk},f_{iljk}\}=\frac{1}{2} \left( \bigl((c_{ik} - c_{il} - c_{kl}) f_{ijk} + ( c_{ik}-c_{ij}- c_{jk}) f_{ikl}\bigl) c_{jl} + \bigl((c_{jl} -c_{jk} - c_{kl} ) f_{ijl} + (c_{jl} - c_{ij} - c_{il}) f_{jkl}\bigl) c_{ik} \right. \left. + (c_i - c_k) (f_{jkl} g_{ijl}-f_{ijl} g_{jkl} ) + (c_l - c_j) (f_{ijk} g_{ikl}-f_{ikl} g_{ijk} )\right)"),
    ('{gijkl, gijlk}', r"\{g_{ijkl}, g_{ijlk}\}=\frac{1}{2}\left( \bigl((c_{kl} - c_{jk} - c_{jl}) f_{ikl} + ( c_{ik} + c_{il}-c_{kl}) f_{jkl}\bigl) c_{ij} + \bigl((c_{ij} -c_{il} - c_{jl}) f_{ijk} + (c_{ik} + c_{jk} - c_{ij}) f_{ijl}\bigl) c_{kl} \right. \left. + (c_j - c_i) (f_{ikl} g_{jkl} + f_{jkl} g_{ikl}) + (c_l - c_k) ( f_{ijl} g_{ijk} + f_{ijk} g_{ijl})\right)"),
    ('{gijkl, giljk}', r"\{g_{ijkl},g_{iljk}\}=\frac{1}{2}\left( \bigl((c_{il} - c_{ik} - c_{kl}) f_{ijl} + ( c_{ij} + c_{jl}-c_{il}) f_{ikl}\bigl) c_{jk} + \bigl((c_{jl} +c_{kl} - c_{jk}) f_{ijk} + (c_{jk} - c_{ij} - c_{ik}) f_{jkl}\bigl) c_{il}\right. \left. + (c_i - c_l) (f_{ijk} g_{jkl} + f_{jkl} g_{ijk} ) + (c_k - c_j) ( f_{ikl} g_{ijl} + f_{ijl} g_{ikl})\right)"),
    ('{gijlk, giljk}', r"\{g_{ijlk},g_{iljk}\}=\left( \bigl((c_{ik} - c_{il} - c_{kl}) f_{ijk} + ( c_{ik} - c_{ij}-c_{jk}) f_{ikl}\bigl) c_{jl} + \bigl((c_{jk} +c_{kl} - c_{jl}) f_{ijl} + (c_{ij} + c_{il} - c_{jl}) f_{jkl}\bigl) c_{ik} \right. \left. + (c_k - c_i) (f_{jkl} g_{ijl} - f_{ijl} g_{jkl} ) + (c_l - c_j) ( f_{ijk} g_{ikl} - f_{ikl} g_{ijk})\right)"),
    ('{fijkl, gijkl}', r"\{f_{ijkl},g_{ijkl}\}= \frac{1}{2}\bigl( \bigl((c_i - c_l) c_{ij} - (c_i - c_j) c_{il}\bigl)c_{jk} c_{kl} +\bigl((c_l - c_k) c_{jk} + (c_k - c_j) c_{kl}\bigl)c_{ij}c_{il} \bigl)"),
    ('{fijkl, gijlk}', r"\{f_{ijkl},g_{ijlk}\}=\frac{1}{2} \left( \bigl(( c_{kl}-c_{jk} - c_{jl}) g_{ikl} + ( c_{ik} + c_{il} - c_{kl}) g_{jkl}\bigl) c_{ij}+\bigl((c_{ij} - c_{il} - c_{jl}) g_{ijk} + ( c_{il} + c_{jk}-c_{ij} ) g_{ijl}\bigl) c_{kl} \right. \left. + (c_l - c_k) (f_{ijk} f_{ijl} + g_{ijk} g_{ijl}) + (c_j - c_i) (f_{ikl} f_{jkl} + g_{ikl} g_{jkl})\right)"),
    ('{fijkl, giljk}', r"\{f_{ijkl},g_{iljk}\}=\frac{1}{2}\left( \bigl(( c_{il}-c_{ik} - c_{kl}) g_{ijl} + ( c_{ij} - c_{il} + c_{jl}) g_{ikl}\bigl) c_{jk}+\bigl((c_{jl} + c_{kl} - c_{jk}) g_{ijk} + ( c_{jk} - c_{ij}-c_{ik} ) g_{jkl}\bigl) c_{il} \right. \left. + (c_k - c_j) (f_{ijl} f_{ikl} + g_{ijl} g_{ikl}) + (c_i - c_l) (f_{ijk} f_{jkl} + g_{ijk} g_{jkl})\right)"),
    ('{fijlk, gijkl}', r"\{f_{ijlk},g_{ijkl}\}= \frac{1}{2}\left( \bigl((c_{kl}-c_{jk} - c_{jl}) g_{ikl} + (c_{ik} + c_{il} - c_{kl}) g_{jkl}\bigl) c_{ij} + \bigl((c_{il} + c_{jl} - c_{ij}) g_{ijk} + (c_{ij} - c_{ik} - c_{jk}) g_{ijl}\bigl) c_{kl} \right. \left. + (c_k - c_l) (f_{ijk} f_{ijl} + g_{ijk} g_{ijl}) +(c_j - c_i) (f_{ikl} f_{jkl} + g_{ikl} g_{jkl})\right)"),
    ('{fijlk, giljk}', r"\{f_{ijlk},g_{iljk}\}= \frac{1}{2} \left( \bigl((c_{ik} - c_{il} - c_{kl}) g_{ijk} + (c_{ij} - c_{ik} + c_{jk}) g_{ikl}\bigl) c_{jl} + \bigl((c_{jk} - c_{jl} + c_{kl}) g_{ijl} + ( c_{jl}-c_{ij} - c_{il}) g_{jkl}\bigl) c_{ik} \right. \left. + (c_j - c_l) (f_{ijk} f_{ikl} - g_{ijk} g_{ikl}) + (c_k - c_i) (f_{ijl} f_{jkl} - g_{ijl} g_{jkl})\right)"),
    ('{filjk, gijkl}', r"\{f_{iljk},g_{ijkl}\}=\frac{1}{2} \left( \bigl((c_{jk} - c_{jl} - c_{kl}) g_{ijk} + (c_{ij} + c_{ik} - c_{jk}) g_{jkl}\bigl) c_{il} + \bigl((c_{il} - c_{ik} - c_{kl}) g_{ijl} + (c_{ij} - c_{il} + c_{jl}) g_{ikl}\bigl) c_{jk} \right. \left. + (c_l - c_i) (f_{ijk} f_{jkl} + g_{ijk} g_{jkl}) + (c_k - c_j) (f_{ijl} f_{ikl} + g_{ijl} g_{ikl})\right)"),
    ('{filjk, gijlk}', r"\{f_{iljk},g_{ijlk}\}= \frac{1}{2}\left( \bigl((c_{jk} - c_{jl} + c_{kl}) g_{ijl} + ( c_{jl}-c_{ij} - c_{il}) g_{jkl}\bigl) c_{ik} + \bigl((c_{il} + c_{kl}-c_{ik}) g_{ijk} + (c_{ik}-c_{ij} - c_{jk}) g_{ikl}\bigl) c_{jl} \right. \left. +(c_l - c_j) (f_{ijk} f_{ikl} - g_{ijk} g_{ikl}) + (c_k - c_i) ( f_{jkl} f_{ijl} - g_{jkl} g_{ijl})\right)"),
]

# left-hand sides whose whole line appears twice in the listing
CUBIC4_REPEATS: list[str] = ['{cjk, fijk}', '{cjk, gijk}', '{ckl, fijk}', '{ckl, gijk}', '{fjkl, gijkl}']

# rows whose printed parentheses do not balance, with the minimal repair
CUBIC4_REPAIRS: dict[str, str] = {
    '{fijk, gjkl}': r"\{f_{ijk},g_{jkl}\}=\frac{1}{2}((c_{ij}-c_{ki})g_{jkl}+(c_{kl}-c_{jl})g_{ijk}+(g_{ijl}-g_{ikl})c_{jk}+(c_k-c_j)g_{iklj})",
}

# n=3, rescaled generators
REL1: list[tuple[str, str]] = [
    ('f123:f123 chain', r"f_{123}=\frac{1}{2}\{\bar{c}_{12}, \bar{c}_{23}\}=\frac{1}{2}\{ \bar{c}_{23}, \bar{c}_{13}\}=\frac{1}{2}\{ \bar{c}_{13}, \bar{c}_{12}\}"),
    ('rel1:{cbar12, f123}', r"\{\bar{c}_{12}, f_{123}\}=(\bar{c}_{23}-\bar{c}_{13})\bar{c}_{12}+(\bar{c}_1-\bar{c}_2)\bigl(c^{[3]}+(\bar{c}_1+\bar{c}_2) c^{[2]}-(\bar{c}_1+\bar{c}_2)^3\bigl)"),
    ('rel1:{cbar13, f123}', r"\{\bar{c}_{13}, f_{123}\}=(\bar{c}_{12}-\bar{c}_{23})\bar{c}_{13}+(\bar{c}_3-\bar{c}_1)\bigl(c^{[3]}+(\bar{c}_1+\bar{c}_3) c^{[2]}-(\bar{c}_1+\bar{c}_3)^3\bigl)"),
    ('rel1:{cbar23, f123}', r"\{\bar{c}_{23}, f_{123}\}=(\bar{c}_{13}-\bar{c}_{12})\bar{c}_{23}+(\bar{c}_2-\bar{c}_3)\bigl(c^{[3]}+(\bar{c}_2+\bar{c}_3) c^{[2]}-(\bar{c}_2+\bar{c}_3)^3\bigl)"),
    ('rel1:{cbar12, g123}', r"\{\bar{c}_{12}, g_{123}\}=2(\bar{c}_1-\bar{c}_2)f_{123}"),
    ('rel1:{cbar13, g123}', r"\{\bar{c}_{13}, g_{123}\}=2(\bar{c}_3-\bar{c}_1)f_{123}"),
    ('rel1:{cbar23, g123}', r"\{\bar{c}_{23}, g_{123}\}=2(\bar{c}_2-\bar{c}_3)f_{123}"),
    ('rel1:{f123, g123}', r"\{f_{123},g_{123}\}=(\bar{c}_1-\bar{c}_3)\bar{c}_{12}\bar{c}_{23}+(\bar{c}_3-\bar{c}_2)\bar{c}_{12}\bar{c}_{13}+(\bar{c}_2-\bar{c}_1)\bar{c}_{13}\bar{c}_{23}-(\bar{c}_1-\bar{c}_2)\times (\bar{c}_2-\bar{c}_3)(\bar{c}_3-\bar{c}_1)\left(c^{[2]}-\frac{1}{3}\bigl((\bar{c}_1-\bar{c}_2)^2+(\bar{c}_1-\bar{c}_2)(\bar{c}_2-\bar{c}_3)+(\bar{c}_2-\bar{c}_3)^2\bigl)\right)"),
]

# n=3, functional relations in the rescaled generators
EQ1_EQU1: list[tuple[str, str]] = [
    ('eq1:cbar1+cbar2+cbar3', r"\bar{c}_1+\bar{c}_2+\bar{c}_3=0"),
    ('eq1:cbar12+cbar13+cbar23', r"\bar{c}_{12}+\bar{c}_{13}+\bar{c}_{23}=c^{[2]}+\bar{c}_1^2+\bar{c}_2^2+\bar{c}_3^2"),
    ('eq1:g123-cbar3cbar12-cbar2cbar13-cbar1cbar23', r"g_{123}-\bar{c}_3 \bar{c}_{12}-\bar{c}_2 \bar{c}_{13}-\bar{c}_1 \bar{c}_{23}=\frac{1}{2}c^{[3]}+\frac{5}{3}(\bar{c}_1^3+\bar{c}_2^3+\bar{c}_3^3)"),
    ('equ1:g²-f²-product', r"g^2_{123}-f^2_{123}-\bigl(\bar{c}_{12}-(\bar{c}_1-\bar{c}_2)^2\bigl)\bigl(\bar{c}_{13}-(\bar{c}_1-\bar{c}_3)^2\bigl)\bigl(\bar{c}_{23}-(\bar{c}_2-\bar{c}_3)^2\bigl)=0"),
]

# n=3, generators against the Lie-algebra Casimirs
C2C3: list[tuple[str, str]] = [
    ('c2', r"c_{12}+c_{13}+c_{23}=c^{[2]}-\frac{1}{2}(c_1^2+c_2^2+c_3^2)"),
    ('c3', r"2 g_{123}- c_3 c_{12}- c_2 c_{13}-c_1 c_{23}=c^{[3]}-\frac{1}{3}(c_1^3+c_2^3+c_3^3)"),
]

# sl(3) Casimirs; the printed cubic line closes one parenthesis too many,
# which is dropped here
CAS3: list[tuple[str, str]] = [
    ('c^[2]', r"c^{[2]}= p_{1,2}+p_{1,3}+p_{2,3}+\frac{1}{3}(h_1^2+h_1 h_2+h_2^2)"),
    ('c^[3]', r"c^{[3]}= p_{1,2,3}+p_{1,3,2}+\frac{1}{3}\left((h_1+2 h_2)p_{1,2}+(h_1- h_2)p_{1,3}-(2h_1+ h_2)p_{2,3}\right)+\frac{1}{9}h_1h_2(h_1-h_2) +\frac{2}{27}(h_1^3-h_2^3)"),
]

CAS2_SL2: str = r"c^{[2]}=\frac{1}{4}h_1^2+p_{1,2}"

# n=3: the Casimir written through generators against its central-element form;
# each index sum runs over the three unordered index choices
CASK: list[tuple[str, str]] = [
    ('cask:generator side = central side', r"f_{123}^2 + \bar{c}_{12} \bar{c}_{13} \bar{c}_{23} - \bar{c}_3^2 \bar{c}_{12}^2 - \bar{c}_2^2 \bar{c}_{13}^2 - \bar{c}_1^2 \bar{c}_{23}^2 - (\bar{c}_1^2 +\bar{c}_2^2) \bar{c}_{31} \bar{c}_{32} - (\bar{c}_1^2 +\bar{c}_3^2) \bar{c}_{21} \bar{c}_{23} - (\bar{c}_2^2 +\bar{c}_3^2) \bar{c}_{12} \bar{c}_{13} + \left((\bar{c}_1 - \bar{c}_2)^2 (\bar{c}_1 - \bar{c}_3)^2 - \bar{c}_1\left( c^{[3]}+\frac{10}{3}(\bar{c}_1^3 + \bar{c}_2^3+ \bar{c}_3^3) \right)\right) \bar{c}_{23} + \left((\bar{c}_2 - \bar{c}_1)^2 (\bar{c}_2 - \bar{c}_3)^2 - \bar{c}_2\left( c^{[3]}+\frac{10}{3}(\bar{c}_1^3 + \bar{c}_2^3+ \bar{c}_3^3) \right)\right) \bar{c}_{13} + \left((\bar{c}_3 - \bar{c}_1)^2 (\bar{c}_3 - \bar{c}_2)^2 - \bar{c}_3\left( c^{[3]}+\frac{10}{3}(\bar{c}_1^3 + \bar{c}_2^3+ \bar{c}_3^3) \right)\right) \bar{c}_{12} = \frac{1}{4}\bigl(c^{[3]}\bigl)^2 + \frac{5}{3} (\bar{c}_1^3 +\bar{c}_2^3 +\bar{c}_3^3 )c^{[3]} +2(\bar{c}_1^2 +\bar{c}_2^2)(\bar{c}_1^2 +\bar{c}_3^2)(\bar{c}_2^2 +\bar{c}_3^2)"),
]


# ---------------------------------------------------------------------------
# phase-space realization (symbols resolved by realization.PhaseSymbols)

# n=3 Casimir identifications and collapses; "recomputed" lines carry the
# coefficient obtained by exact reduction where the printed one disagrees
REAL3_COLLAPSE: list[tuple[str, str]] = [
    ("c2:identification", r"c^{[2]}=-\frac{1}{2}\left(H+\frac{1}{6}(\alpha_1+\alpha_2+\alpha_3)^2\right)"),
    ("c3:identification", r"c^{[3]}=\frac{{\rm i}}{3} (\alpha_1+\alpha_2+\alpha_3) c^{[2]}+\frac{{\rm i}}{27}(\alpha_1+\alpha_2+\alpha_3)^3"),
    ("HS2:H through c^[2]", r"H=-2 c^{[2]}-\frac{1}{6}(\alpha_1+\alpha_2+\alpha_3)^2"),
    ("eq:g123red:as printed", r"g_{123}={\rm i}\; (\alpha_3 c_{12}+\alpha_2 c_{13}+\alpha_1 c_{23}+\alpha_1 \alpha_2 \alpha_3)"),
    ("eq:g123red:recomputed coefficient i/2", r"g_{123}=\frac{{\rm i}}{2} (\alpha_3 c_{12}+\alpha_2 c_{13}+\alpha_1 c_{23}+\alpha_1 \alpha_2 \alpha_3)"),
]

# c_ij in canonical coordinates, 1 <= i < j <= n
COMMUT: str = r"c_{ij}=-\frac{1}{4}\left( (s_i p_j-s_j p_i)^2+\alpha_i^2 \frac{s_j^2}{s_i^2}+\alpha_j^2 \frac{s_i^2}{s_j^2}+2 \alpha_i \alpha_j\right)"

REAL4_COLLAPSE: list[tuple[str, str]] = [
    ("c2:identification", r"c^{[2]}=-\frac{1}{2}\left(H+\frac{1}{4}(\alpha_1+\alpha_2+\alpha_3+\alpha_4)^2\right)"),
    ("c3:identification", r"c^{[3]}=\frac{{\rm i}}{2} (\alpha_1+\alpha_2+\alpha_3+\alpha_4) c^{[2]}+\frac{{\rm i}}{16}(\alpha_1+\alpha_2+\alpha_3+\alpha_4)^3"),
    ("c4:as printed", r"c^{[4]}=-\frac{1}{16} \left(\alpha _1+\alpha _2+\alpha _3+\alpha _4\right){}^2 c^{[2]}+\frac{1}{8} \left(\alpha _1+\alpha _2+\alpha _3\right) \left(\alpha _1+\alpha _2+\alpha _3+\alpha _4\right){}^3 -\frac{1}{8} \left((\alpha _1+\alpha _2+\alpha _3)^2+3 \left(\alpha _1 \alpha _2+\alpha _2 \alpha _3+\alpha _1 \alpha _3\right)\right) \left(\alpha _1+\alpha _2+\alpha _3+\alpha _4\right){}^2 +\frac{1}{2} (\alpha_1+\alpha_2)(\alpha_2+\alpha_3)(\alpha_1+\alpha_3) \left(\alpha _1+\alpha _2+\alpha _3+\alpha _4\right)-\frac{9}{256}  \left(\alpha _1+\alpha _2+\alpha _3+\alpha _4\right){}^4 +2 \alpha _1 \alpha _2 \alpha _3 \alpha_4"),
    ("c4:recomputed", r"c^{[4]}=\frac{1}{2}\left(c^{[2]}\right)^2-\frac{1}{16} \left(\alpha _1+\alpha _2+\alpha _3+\alpha _4\right)^2 c^{[2]}-\frac{3}{256}\left(\alpha _1+\alpha _2+\alpha _3+\alpha _4\right)^4"),
    ("H:through c^[2]", r"H=-2 c^{[2]}-\frac{1}{4}(\alpha_1+\alpha_2+\alpha_3+\alpha_4)^2"),
]

# n=4, for all distinct i, j, k, l
COLLAPSES: list[tuple[str, str]] = [
    ("g_ijk", r"g_{ijk}=\frac{{\rm i}}{2}(\alpha_k c_{ij}+\alpha_j c_{ik}+\alpha_i c_{jk}+\alpha_i \alpha_j \alpha_k)"),
    ("g_ijkl", r"g_{ijkl}=\frac{1}{2}(c_{ij}c_{kl}+c_{il}c_{jk}-c_{ik}c_{jl}-\alpha_i \alpha_k c_{jl}-\alpha_j \alpha_l c_{ik}-\alpha_i \alpha_j \alpha_k \alpha_l)"),
    ("f_ijkl", r"f_{ijkl}=\frac{{\rm i}}{2}(\alpha_l f_{ijk}+\alpha_k f_{ijl}+\alpha_j f_{ikl}+\alpha_i f_{jkl})"),
]

# Omega_1, Omega_2, Omega_3 of the n=3 Casimir collapse; the index sum in
# Omega_2 runs over the three choices of i
OMEGA_PRINTED: list[str] = [
    r"-\frac{1}{144}(\alpha_1+\alpha_2+\alpha_3)^2",
    r"\frac{1}{144} \left(\alpha _1+\alpha _2+\alpha _3\right) \left((\alpha_1+\alpha_2+\alpha_3)^3-5\left(\alpha_1(\alpha_2+\alpha_3)^2+\alpha_2(\alpha_1+\alpha_3)^2+\alpha_3(\alpha_1+\alpha_2)^2\right)+30 \alpha_1 \alpha_2 \alpha_3\right)",
    r"\frac{1}{576} \bigl(\alpha _1^6-4 \left(\alpha _2+\alpha _3\right) \alpha _1^5+\left(9 \alpha _2^2+2 \alpha _3 \alpha _2+9 \alpha _3^2\right) \alpha _1^4-2 \left(\alpha _2+\alpha _3\right)\alpha_1^3 \left(4 \alpha _2^2-3 \alpha _3 \alpha _2+4 \alpha _3^2\right)+\left(9 \alpha _2^4-2 \alpha _3 \alpha _2^3+6 \alpha _3^2 \alpha _2^2-2 \alpha _3^3 \alpha _2+9 \alpha _3^4\right) \alpha _1^2 -2 \left(\alpha _2+\alpha _3\right) \left(\alpha _2^2+\alpha _3^2\right) \left(2 \alpha _2^2-3 \alpha _3 \alpha _2+2 \alpha _3^2\right) \alpha _1+\left(\alpha _2^2+\alpha _3^2\right) \left(\alpha _2^4-4 \alpha _3 \alpha _2^3+8 \alpha _3^2 \alpha _2^2-4 \alpha _3^3 \alpha _2+\alpha _3^4\right)\bigr)",
]

REAL3_RACAH: list[tuple[str, str]] = [
    ("f123real:f_123", r"f_{123}=\frac{1}{2}\{\bar{c}_{12}, \bar{c}_{23}\}=\frac{1}{2}\{ \bar{c}_{23}, \bar{c}_{13}\}=\frac{1}{2}\{ \bar{c}_{13}, \bar{c}_{12}\}"),
    ("f123real:{cbar12, f123}", r"\{\bar{c}_{12}, f_{123}\}=\bar{c}_{12}(\bar{c}_{23}-\bar{c}_{13})+\frac{1}{16}(\alpha_1^2-\alpha_2^2)(2 H-\alpha_3^2)"),
    ("f123real:{cbar13, f123}", r"\{\bar{c}_{13},f_{123}\}=\bar{c}_{13}(\bar{c}_{12}-\bar{c}_{23})+\frac{1}{16}(\alpha_3^2-\alpha_1^2)(2 H-\alpha_2^2)"),
    ("f123real:{cbar23, f123}", r"\{\bar{c}_{23}, f_{123}\}=\bar{c}_{23}(\bar{c}_{13}-\bar{c}_{12})+\frac{1}{16}(\alpha_2^2-\alpha_3^2)(2 H-\alpha_1^2)"),
    ("eq:lineq:linear relation", r"\frac{H}{2}+\bar{c}_{12}+\bar{c}_{13}+\bar{c}_{23}+\frac{1}{4}(\alpha_1^2+\alpha_2^2+\alpha_3^2)=0"),
    ("eq:f123:F_123", r"F_{123}= \frac{1}{2}\{C_{12},C_{23}\}=\frac{1}{2}\{C_{23},C_{13}\}=\frac{1}{2}\{C_{13},C_{12}\}"),
    ("eq:f123:{C12, F123}", r"\{C_{12},F_{123}\}=(C_{23}-C_{13})C_{12}+(C_2-C_1)(C_3-C_{123})"),
    ("eq:f123:{C13, F123}", r"\{C_{13},F_{123}\}=(C_{12}-C_{23})C_{13}+(C_1-C_3)(C_2-C_{123})"),
    ("eq:f123:{C23, F123}", r"\{C_{23},F_{123}\}=(C_{13}-C_{12})C_{23}+(C_3-C_2)(C_1-C_{123})"),
    ("RacahLinRel:C_123", r"C_{123}=C_{12}+C_{13}+C_{23}-C_1-C_2-C_3"),
    ("centr:P_11", r"P_{11}=-\frac{1}{2}\alpha_1^2"),
    ("centr:P_22", r"P_{22}=-\frac{1}{2}\alpha_2^2"),
    ("centr:P_33", r"P_{33}=-\frac{1}{2}\alpha_3^2"),
    ("centr:P_12", r"P_{12}=-\frac{1}{4}\left( (s_1 p_2-s_2 p_1)^2+\left(\alpha_1^2\frac{s_2^2}{s_1^2} +\alpha_2^2\frac{s_1^2}{s_2^2} \right)\right)"),
    ("centr:P_13", r"P_{13}=-\frac{1}{4}\left( (s_1 p_3-s_3 p_1)^2+\left(\alpha_1^2\frac{s_3^2}{s_1^2} +\alpha_3^2\frac{s_1^2}{s_3^2} \right)\right)"),
    ("centr:P_23", r"P_{23}=-\frac{1}{4}\left( (s_2 p_3-s_3 p_2)^2+\left(\alpha_2^2\frac{s_3^2}{s_2^2} +\alpha_3^2\frac{s_2^2}{s_3^2} \right)\right)"),
    ("eq:f123P:F_123", r"F_{123}= \frac{1}{2}\{P_{12},P_{23}\}=\frac{1}{2}\{P_{23},P_{13}\}=\frac{1}{2}\{P_{13},P_{12}\}"),
    ("eq:f123P:{P12, F123}", r"\{P_{12},F_{123}\}=(P_{12}+P_{11})P_{23}-(P_{12}+P_{22})P_{13}"),
    ("eq:f123P:{P13, F123}", r"\{P_{13},F_{123}\}=(P_{13}+P_{33})P_{12}-(P_{13}+P_{11})P_{23}"),
    ("eq:f123P:{P23, F123}", r"\{P_{23},F_{123}\}=(P_{23}+P_{22})P_{13}-(P_{23}+P_{33})P_{12}"),
]

# n=3, for all distinct i, j, k
ANTS: list[tuple[str, str]] = [
    ("{P_ij, P_jk} = 2F_ijk", r"\{P_{ij}, P_{jk}\}=2 F_{ijk}"),
    ("{P_jk, F_ijk}", r"\{P_{jk}, F_{ijk}\}=(P_{jk}+P_{jj})P_{ik}-(P_{jk}+P_{kk})P_{ij}"),
]

REAL4_RACAH: list[tuple[str, str]] = [
    ("eq:linequa:linear relation", r"\frac{H}{2}+\bar{c}_{12}+\bar{c}_{13}+\bar{c}_{14}+\bar{c}_{23}+\bar{c}_{24}+\bar{c}_{34}+\frac{1}{2}(\alpha_1^2+\alpha_2^2+\alpha_3^2+\alpha_4^2)=0"),
]

# n=4, for 1 <= i < j < k <= 4
FIJK4R: str = r"f_{ijk}=\frac{1}{2}\{\bar{c}_{ij},\bar{c}_{jk}\}=\frac{1}{2}\{\bar{c}_{jk},\bar{c}_{ik}\}=\frac{1}{2}\{\bar{c}_{ik},\bar{c}_{ij}\}"

# n=4, for all distinct i, j, k, l
R4: list[tuple[str, str]] = [
    ("{P_ij, P_kl} = 0", r"\{P_{ij}, P_{kl}\}=0"),
    ("{P_ij, P_jk} = 2F_ijk", r"\{P_{ij}, P_{jk}\}=2 F_{ijk}"),
    ("{P_jk, F_ijk}", r"\{P_{jk}, F_{ijk}\}=(P_{jk}+P_{jj})P_{ik}-(P_{jk}+P_{kk})P_{ij}"),
    ("{P_kl, F_ijk}", r"\{P_{kl}, F_{ijk}\}=P_{ik}P_{jl}-P_{il}P_{jk}"),
    ("{F_ijk, F_jkl}", r"\{F_{ijk}, F_{jkl}\}=-(F_{ijl}+F_{ikl})P_{jk}"),
]
