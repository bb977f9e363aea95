"""Writes the hand-specified fixture documents of the corpus.

Run from anywhere: python3 corpus/make_fixtures.py
"""
import json
import pathlib

HERE = pathlib.Path(__file__).resolve().parent


def doc(kind, payload):
    return {"schemaVersion": "1", "kind": kind, "payload": payload}


def algebra(label, dim, bracket=(), product=()):
    return {"label": label, "dim": dim, "bracket": [list(e) for e in bracket],
            "product": [list(e) for e in product]}


def antisym(entries):
    out = []
    for i, j, k, v in entries:
        out.append((i, j, k, v))
        out.append((j, i, k, v[1:] if v.startswith("-") else "-" + v))
    return sorted(out)


def matrix(rows, cols, entries=()):
    return {"rows": rows, "cols": cols, "entries": [list(e) for e in entries]}


def identity(n):
    return matrix(n, n, [(i, i, "1") for i in range(n)])


def neg(entries):
    return sorted((i, j, k, v[1:] if v.startswith("-") else "-" + v) for i, j, k, v in entries)


# sl2 in the basis e, f, h: [e,f] = h, [h,e] = 2e, [h,f] = -2f
SL2 = antisym([(0, 1, 2, "1"), (2, 0, 0, "2"), (2, 1, 1, "-2")])
R2 = antisym([(0, 1, 1, "1")])
HEIS = antisym([(0, 1, 2, "1")])

FIXTURES = {
    "a1_null": doc("algebra", algebra("a1", 1)),
    "sl2_zero_product": doc("algebra", algebra("sl2", 3, SL2)),
    "sl2_neg_bracket": doc("algebra", algebra("sl2 (a.b = -[a,b])", 3, SL2, neg(SL2))),
    "r2": doc("algebra", algebra("r2", 2, R2)),
    "heisenberg": doc("algebra", algebra("heisenberg", 3, HEIS)),
    "prelie_dual_numbers": doc("algebra", algebra("dual numbers", 2, (),
                                                  [(0, 0, 0, "1"), (0, 1, 1, "1"), (1, 0, 1, "1")])),
    "abelian2": doc("algebra", algebra("abelian", 2)),
    "trivial_1d": doc("action", {"space": algebra("V", 1)}),
    "omega_fixture": doc("cocycle", {"acting": algebra("a1", 1), "space": algebra("V", 1),
                                     "omega": [[0, 0, 0, "1"]]}),
    "sigma_diag_fixture": doc("cocycle", {"acting": algebra("a1", 1), "space": algebra("V", 1),
                                          "sigma": [[0, 0, 0, "1"]]}),
    "r2_ideal_crossed": doc("crossed_module", {
        "action": {"acting": algebra("r2", 2, R2), "space": algebra("span e2", 1),
                   "rho": [[0, 0, 0, "1"]]},
        "boundary": matrix(2, 1, [(1, 0, "1")])}),
    "pair_identity_1d": doc("aut_pair", {"beta": identity(1), "alpha": identity(1)}),
    "pair_beta2_alpha1": doc("aut_pair", {"beta": matrix(1, 1, [(0, 0, "2")]), "alpha": identity(1)}),
    "pair_beta4_alpha2": doc("aut_pair", {"beta": matrix(1, 1, [(0, 0, "4")]),
                                          "alpha": matrix(1, 1, [(0, 0, "2")])}),
    "witness_zero_1x1": doc("witness", {"map": matrix(1, 1)}),
    "witness_one_1x1": doc("witness", {"map": matrix(1, 1, [(0, 0, "1")])}),
    "decimal_entry": doc("algebra", algebra("bad", 1, (), [(0, 0, 0, "0.5")])),
}

# mutated sl2: a . b = -[a,b] with one product entry perturbed, h.e gains +e
mut = algebra("sl2 mutated", 3, SL2, neg(SL2))
mut["product"] = [[i, j, k, ("-1" if (i, j, k) == (2, 0, 0) else v)] for i, j, k, v in mut["product"]]
FIXTURES["mutated_sl2"] = doc("algebra", mut)

# adjoint crossed module (A, A, id) over sl2 with a . b = -[a,b]
sl2n = FIXTURES["sl2_neg_bracket"]["payload"]
rho, psi, phi = [], [], []
for i, j, k, v in sl2n["bracket"]:
    rho.append([i, j, k, v])
for i, j, k, v in sl2n["product"]:
    phi.append([i, j, k, v])      # phi_a(x) = a . x
    psi.append([j, i, k, v])      # psi_a(x) = x . a
FIXTURES["sl2_adjoint_crossed"] = doc("crossed_module", {
    "action": {"acting": sl2n, "space": sl2n, "rho": sorted(rho), "psi": sorted(psi), "phi": sorted(phi)},
    "boundary": identity(3)})
FIXTURES["sl2_adjoint_action"] = doc("action", FIXTURES["sl2_adjoint_crossed"]["payload"]["action"])

# sl2 written with non-reduced fractions; parses to the same tensor
FIXTURES["sl2_fraction_entries"] = doc("algebra", algebra(
    "sl2", 3, [(i, j, k, {"1": "2/2", "-1": "-3/3", "2": "4/2", "-2": "-2/1"}[v]) for i, j, k, v in SL2]))

R2N = neg(R2)
FIXTURES["r2_neg_bracket"] = doc("algebra", algebra("r2 (a.b = -[a,b])", 2, R2, R2N))


def adjoint(payload, rho_scale=1, swap=False):
    rho = [[i, j, k, v] for i, j, k, v in payload["bracket"]]
    if rho_scale != 1:
        rho = [[i, j, k, str(rho_scale * frac(v))] for i, j, k, v in rho]
    phi = [[i, j, k, v] for i, j, k, v in payload["product"]]
    psi = [[j, i, k, v] for i, j, k, v in payload["product"]]
    if swap:
        phi, psi = psi, phi
    return {"acting": payload, "space": payload, "rho": sorted(rho), "psi": sorted(psi), "phi": sorted(phi)}


def frac(v):
    from fractions import Fraction
    return Fraction(v)


sl2z = FIXTURES["sl2_zero_product"]["payload"]
r2p = FIXTURES["r2"]["payload"]
FIXTURES["sl2_swapped_action"] = doc("action", adjoint(sl2n, swap=True))
FIXTURES["sl2_double_rho_action"] = doc("action", adjoint(sl2n, rho_scale=2))
FIXTURES["sl2_zero_adjoint_action"] = doc("action", adjoint(sl2z))
FIXTURES["null1_phi_identity_rep"] = doc("action", {"acting": algebra("a1", 1), "space": algebra("V", 1),
                                                    "phi": [[0, 0, 0, "1"]]})
FIXTURES["sl2_double_boundary_crossed"] = doc("crossed_module", {
    "action": adjoint(sl2n), "boundary": matrix(3, 3, [(i, i, "2") for i in range(3)])})
FIXTURES["r2_adjoint_crossed"] = doc("crossed_module", {"action": adjoint(r2p), "boundary": identity(2)})
FIXTURES["sl2_negation_morphism"] = doc("morphism", {
    "source": sl2z, "target": sl2z, "matrix": matrix(3, 3, [(i, i, "-1") for i in range(3)])})
FIXTURES["sl2_chevalley_morphism"] = doc("morphism", {
    "source": sl2z, "target": sl2z, "matrix": matrix(3, 3, [(1, 0, "1"), (0, 1, "1"), (2, 2, "-1")])})


# ---- block constructions on A (+) H, A coordinates first -------------------

def dense3(entries, n0, n1, n2):
    t = [[[frac(0)] * n2 for _ in range(n1)] for _ in range(n0)]
    for i, j, k, v in entries:
        t[i][j][k] += frac(v)
    return t


def sparse3(t):
    return [[i, j, k, str(v)] for i, r in enumerate(t) for j, c in enumerate(r) for k, v in enumerate(c) if v]


def block(acting, space, rho=(), psi=(), phi=(), sigma=(), omega=(), label="E"):
    m, n = acting["dim"], space["dim"]
    N = m + n
    br = dense3([], N, N, N)
    pr = dense3([], N, N, N)
    ab, ap = dense3(acting.get("bracket", []), m, m, m), dense3(acting.get("product", []), m, m, m)
    hb, hp = dense3(space.get("bracket", []), n, n, n), dense3(space.get("product", []), n, n, n)
    R, S, F = dense3(rho, m, n, n), dense3(psi, m, n, n), dense3(phi, m, n, n)
    sg, om = dense3(sigma, m, m, n), dense3(omega, m, m, n)
    for a in range(m):
        for b in range(m):
            for k in range(m):
                br[a][b][k] += ab[a][b][k]
                pr[a][b][k] += ap[a][b][k]
            for k in range(n):
                br[a][b][m + k] += sg[a][b][k]
                pr[a][b][m + k] += om[a][b][k]
        for x in range(n):
            for k in range(n):
                br[a][m + x][m + k] += R[a][x][k]       # [a, x] = rho_a x
                br[m + x][a][m + k] -= R[a][x][k]
                pr[a][m + x][m + k] += F[a][x][k]       # a . x = phi_a x
                pr[m + x][a][m + k] += S[a][x][k]       # x . a = psi_a x
    for x in range(n):
        for y in range(n):
            for k in range(n):
                br[m + x][m + y][m + k] += hb[x][y][k]
                pr[m + x][m + y][m + k] += hp[x][y][k]
    return algebra(label, N, sparse3(br), sparse3(pr))


def split_extension(acting, space, section_shift=(), label="E", **maps):
    m, n = acting["dim"], space["dim"]
    total = block(acting, space, label=label, **maps)
    section = [(a, a, "1") for a in range(m)] + [(m + k, a, v) for k, a, v in section_shift]
    return {"acting": acting, "space": space, "total": total,
            "inj": matrix(m + n, n, [(m + x, x, "1") for x in range(n)]),
            "proj": matrix(m, m + n, [(a, a, "1") for a in range(m)]),
            "section": matrix(m + n, m, sorted(section))}


a1, v1 = algebra("a1", 1), algebra("V", 1)
FIXTURES["omega_extension"] = doc("extension", split_extension(a1, v1, omega=[(0, 0, 0, "1")], label="e.e = v"))
FIXTURES["omega_extension_shifted"] = doc("extension", split_extension(
    a1, v1, section_shift=[(0, 0, "1")], omega=[(0, 0, 0, "1")], label="e.e = v"))
adj = adjoint(sl2n)
maps = {k: adj[k] for k in ("rho", "psi", "phi")}
FIXTURES["sl2_split_extension"] = doc("extension", split_extension(sl2n, sl2n, label="sl2 x sl2", **maps))
FIXTURES["sl2_split_extension_ell"] = doc("extension", split_extension(
    sl2n, sl2n, section_shift=[(0, 0, "1"), (2, 1, "1"), (1, 2, "-1/2")], label="sl2 x sl2", **maps))
FIXTURES["r2_sigma_extension"] = doc("extension", split_extension(
    r2p, v1, sigma=[(0, 1, 0, "1"), (1, 0, 0, "-1")], label="r2 x_sigma V"))
FIXTURES["r2_sigma_extension_nosection"] = doc("extension", {
    k: v for k, v in FIXTURES["r2_sigma_extension"]["payload"].items() if k != "section"})
FIXTURES["omega_shift_witness"] = doc("witness", {"map": matrix(1, 1, [(0, 0, "1")])})
FIXTURES["r2_trivial_rep"] = doc("action", {"acting": r2p, "space": v1})
FIXTURES["zero_rep_over_a1"] = doc("action", {"acting": a1, "space": algebra("0", 0)})


def cat1_from_adjoint(payload, tau_is_sigma=False):
    m = payload["dim"]
    ad = adjoint(payload)
    total = block(payload, payload, rho=ad["rho"], psi=ad["psi"], phi=ad["phi"], label="A x A")
    sigma = matrix(2 * m, 2 * m, [(a, a, "1") for a in range(m)])
    tau = matrix(2 * m, 2 * m, sorted([(a, a, "1") for a in range(m)] + [(a, m + a, "1") for a in range(m)]))
    sub = [[("1" if i == a else "0") for i in range(2 * m)] for a in range(m)]
    return {"total": total, "sub": sub, "sigma": sigma, "tau": sigma if tau_is_sigma else tau}


FIXTURES["r2_adjoint_cat1"] = doc("cat1", cat1_from_adjoint(r2p))
FIXTURES["sl2_cat1_tau_is_sigma"] = doc("cat1", cat1_from_adjoint(sl2n, tau_is_sigma=True))

CHEV = matrix(3, 3, [(1, 0, "1"), (0, 1, "1"), (2, 2, "-1")])
FIXTURES["sl2_chevalley_pair"] = doc("aut_pair", {"beta": CHEV, "alpha": CHEV, "space": sl2z, "acting": sl2z})

if __name__ == "__main__":
    for name, d in FIXTURES.items():
        (HERE / f"{name}.json").write_text(json.dumps(d, indent=2) + "\n")
    (HERE / "not_json.json").write_text('{"schemaVersion": "1",\n  "kind": "algebra",\n  "payload": {"dim": 1,,}\n}\n')
