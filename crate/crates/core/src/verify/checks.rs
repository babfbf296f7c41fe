use num_bigint::BigInt;
use serde_json::json;

use super::sample::Sampler;
use super::search::{
    coordinates, expected_truncation, order_of_q_squared, search_transparent, search_transparent_generic,
    TransparentSubspace,
};
use super::{run_check, VerifyReport};
use crate::annulus11::{A11Algebra, A11Elem, BasisKey};
use crate::error::{Error, Result};
use crate::linalg;
use crate::qscalar::{
    CyclotomicField, Field, Integers, LaurentQ, QRat, RationalFunctions, Ring,
};
use crate::weblambda::{
    bold_x, bold_y, elementary_symmetric_all, tilde_x, tilde_y, to_eprime, x_summands, y_summands,
    EPrimePoly, LLPoly,
};
use crate::xyring::{
    compose_pq, e_coeff, f_coeff, p_int, power_sums_from_table, psi, psi_at, q_int, XYPoly,
};

/// Bidegree bound of the generic-`q` search in the default suite.
pub const GENERIC_SEARCH_BOUND: (u64, u64) = (10, 10);

fn mismatch<T: std::fmt::Display>(what: &str, lhs: &T, rhs: &T) -> Option<String> {
    Some(format!("{what}: {lhs} != {rhs}"))
}

/// Runs Newton's identities and the elementary-sum identity against
/// the given tables.
pub fn check_elementary_sums_with(name: &str, e: &[XYPoly<BigInt>], f: &[XYPoly<BigInt>]) -> VerifyReport {
    run_check(name, json!({"e_max": e.len() - 1, "f_max": f.len() - 1}), || {
        let ring = Integers;
        let ex = elementary_symmetric_all(&ring, &x_summands(&ring));
        let ey = elementary_symmetric_all(&ring, &y_summands(&ring));
        for (i, (table, sums)) in e.iter().zip(&ex).enumerate() {
            let lhs = psi(&ring, table);
            if &lhs != sums {
                return Ok(mismatch(&format!("psi(e_{i})"), &lhs, sums));
            }
        }
        for (i, (table, sums)) in f.iter().zip(&ey).enumerate() {
            let lhs = psi(&ring, table);
            if &lhs != sums {
                return Ok(mismatch(&format!("psi(f_{i})"), &lhs, sums));
            }
        }
        // the tables must also reproduce the power sums
        for (k, p) in power_sums_from_table(f, 6).iter().enumerate().skip(1) {
            if psi(&ring, p) != bold_y(&ring, k as u32) {
                return Ok(Some(format!("Newton's identities fail for Q_{k}")));
            }
        }
        Ok(None)
    })
}

pub fn check_elementary_sums() -> VerifyReport {
    let e: Vec<_> = (0..=7).map(|i| e_coeff(i).unwrap()).collect();
    let f: Vec<_> = (0..=14).map(|i| f_coeff(i).unwrap()).collect();
    check_elementary_sums_with("elementary_sums", &e, &f)
}

/// The table with `f_3` missing its `+x` term.
pub fn corrupted_f_table() -> Vec<XYPoly<BigInt>> {
    let mut f: Vec<_> = (0..=14).map(|i| f_coeff(i).unwrap()).collect();
    f[3] = f[3].sub(&XYPoly::x(&Integers));
    f
}

/// Passes when the corrupted table is caught with a witness.
pub fn check_elementary_sums_mutation() -> VerifyReport {
    run_check("elementary_sums_mutation", json!({"mutation": "f_3 without +x"}), || {
        let e: Vec<_> = (0..=7).map(|i| e_coeff(i).unwrap()).collect();
        let inner = check_elementary_sums_with("elementary_sums", &e, &corrupted_f_table());
        Ok(match (inner.passed(), inner.witness) {
            (false, Some(w)) if w.contains("f_3") => None,
            (false, w) => Some(format!("mutation caught at the wrong place: {w:?}")),
            (true, _) => Some("corrupted f_3 was not detected".to_string()),
        })
    })
}

/// Printed values of `P_2`, `Q_2`, `P_0`, `Q_0` and the bidegrees of
/// `P_k`, `Q_k` for `k <= kmax`.
pub fn check_known_values(kmax: u32) -> VerifyReport {
    run_check("known_values", json!({"kmax": kmax}), || {
        let printed = [
            ("P_2", p_int(2).to_string(), "x^2 - 2*x - 2*y"),
            ("Q_2", q_int(2).to_string(), "-2*x^3 + 2*x^2 + 4*x*y + y^2 + 2*x"),
            ("P_0", p_int(0).to_string(), "7"),
            ("Q_0", q_int(0).to_string(), "14"),
        ];
        for (name, got, want) in printed {
            if got != want {
                return Ok(Some(format!("{name} = {got}, expected {want}")));
            }
        }
        let q2 = XYPoly::parse(&Integers, "y^2 - 2*x^3 + 2*x^2 + 4*x*y + 2*x")?;
        if *q_int(2) != q2 {
            return Ok(mismatch("Q_2", &*q_int(2), &q2));
        }
        for k in 1..=kmax as u64 {
            let dp = p_int(k as usize).bidegree()?;
            let dq = q_int(k as usize).bidegree()?;
            if dp != (k, k) || dq != (2 * k, k) {
                return Ok(Some(format!("D2(P_{k}) = {dp:?}, D2(Q_{k}) = {dq:?}")));
            }
        }
        Ok(None)
    })
}

/// `P_k(x1, y1) = x(k)`, `Q_k(x1, y1) = y(k)` for `k <= kmax`, and
/// `P_k(x(i), y(i)) = x(ik)` (same for `Q`) for `i <= phi_imax`, `k <= phi_kmax`.
pub fn check_power_sums(kmax: u32, phi_imax: u32, phi_kmax: u32) -> VerifyReport {
    let params = json!({"kmax": kmax, "phi_imax": phi_imax, "phi_kmax": phi_kmax});
    run_check("power_sums", params, || {
        let r = Integers;
        for k in 1..=kmax {
            let lhs = psi(&r, &p_int(k as usize));
            if lhs != bold_x(&r, k) {
                return Ok(Some(format!("P_{k}(x(1), y(1)) != x({k})")));
            }
            let lhs = psi(&r, &q_int(k as usize));
            if lhs != bold_y(&r, k) {
                return Ok(Some(format!("Q_{k}(x(1), y(1)) != y({k})")));
            }
        }
        for i in 2..=phi_imax {
            for k in 1..=phi_kmax {
                if psi_at(&r, &p_int(k as usize), i) != bold_x(&r, i * k) {
                    return Ok(Some(format!("P_{k}(x({i}), y({i})) != x({})", i * k)));
                }
                if psi_at(&r, &q_int(k as usize), i) != bold_y(&r, i * k) {
                    return Ok(Some(format!("Q_{k}(x({i}), y({i})) != y({})", i * k)));
                }
            }
        }
        Ok(None)
    })
}

/// `P_k(P_i, Q_i) = P_ik` and `Q_k(P_i, Q_i) = Q_ik` for `1 <= i, k`.
pub fn check_composition(imax: u32, kmax: u32) -> VerifyReport {
    run_check("composition", json!({"imax": imax, "kmax": kmax}), || {
        let r = Integers;
        for i in 1..=imax as usize {
            for k in 1..=kmax as usize {
                if compose_pq(&r, &p_int(k), i) != *p_int(i * k) {
                    return Ok(Some(format!("P_{k}(P_{i}, Q_{i}) != P_{}", i * k)));
                }
                if compose_pq(&r, &q_int(k), i) != *q_int(i * k) {
                    return Ok(Some(format!("Q_{k}(P_{i}, Q_{i}) != Q_{}", i * k)));
                }
            }
        }
        Ok(None)
    })
}

/// For all `i, j, s, t <= range_bound` with `d2(x(i) y(j)) < d2(x(s) y(t))`,
/// `x(i) y(j)` has no term `l1^(s+2t) l2^(s+t)` and none `l1^(s+2t) l2^t`.
pub fn check_leading_terms(range_bound: u32) -> VerifyReport {
    run_check("leading_terms", json!({"range_bound": range_bound}), || {
        let r = Integers;
        let n = range_bound as usize + 1;
        let mut products = Vec::with_capacity(n * n);
        for i in 0..n as u32 {
            for j in 0..n as u32 {
                let prod = bold_x(&r, i).mul(&bold_y(&r, j));
                let d2 = prod.d2()?;
                products.push(((i, j), prod, d2));
            }
        }
        for ((i, j), prod, d_low) in &products {
            for ((s, t), _, d_high) in &products {
                if d_low >= d_high {
                    continue;
                }
                let (s, t) = (*s as i64, *t as i64);
                for key in [(s + 2 * t, s + t), (s + 2 * t, t)] {
                    if prod.coeff(key.0, key.1).is_some() {
                        return Ok(Some(format!(
                            "x({i})y({j}) contains l1^{}*l2^{} from (s, t) = ({s}, {t})",
                            key.0, key.1
                        )));
                    }
                }
            }
        }
        Ok(None)
    })
}

/// Commutativity, associativity, unit and absorption on seeded random
/// elements of `A11` over `Q(q)`.
pub fn check_a11_presentation(samples: u32, index_bound: u32, seed: u64) -> VerifyReport {
    let params = json!({"samples": samples, "index_bound": index_bound, "seed": seed});
    run_check("a11_presentation", params, || {
        let alg = A11Algebra::new(RationalFunctions)?;
        let mut rng = Sampler::new(seed);
        for s in 0..samples {
            let (u, v, w) = (rng.a11(index_bound), rng.a11(index_bound), rng.a11(index_bound));
            let uv = alg.mul(&u, &v);
            if uv != alg.mul(&v, &u) {
                return Ok(Some(format!("sample {s}: uv != vu for u = {u}, v = {v}")));
            }
            if alg.mul(&uv, &w) != alg.mul(&u, &alg.mul(&v, &w)) {
                return Ok(Some(format!("sample {s}: (uv)w != u(vw) for u = {u}, v = {v}, w = {w}")));
            }
            if alg.mul(&alg.unit(), &u) != u {
                return Ok(Some(format!("sample {s}: 1*u != u for u = {u}")));
            }
            let k = rng.gen_range(-(index_bound as i64), index_bound as i64);
            let b = index_bound as i64;
            let key = BasisKey::F(rng.gen_range(0, b) as u32, rng.gen_range(0, b) as u32);
            let fkey = A11Elem::basis(key, RationalFunctions.one());
            if alg.mul(&alg.a_pow(k), &fkey) != fkey {
                return Ok(Some(format!("a^{k} * {key} != {key}")));
            }
        }
        Ok(None)
    })
}

/// Two routes to the star elements, the loop-through-`f` identities, the
/// loops-inside-`f` identity and agreement of the two defect formulas.
pub fn check_star_consistency(samples: u32, bound: (u64, u64), seed: u64) -> VerifyReport {
    let params = json!({"samples": samples, "bound": [bound.0, bound.1], "seed": seed});
    run_check("star_consistency", params, || {
        let r = RationalFunctions;
        let alg = A11Algebra::new(r)?;
        let x1 = to_eprime(&r, &bold_x(&r, 1))?;
        let y1 = to_eprime(&r, &bold_y(&r, 1))?;
        let corr = A11Elem::basis(BasisKey::FF, QRat::from_laurent(LaurentQ::parse("q^2 + 2 + q^-2")?).inv()?);
        let routes = [
            ("F^*(x(1)) vs x^*", alg.f_up(&x1), alg.x_up_star().clone()),
            ("F_*(x(1)) vs x_*", alg.f_down(&x1), alg.x_down_star().clone()),
            ("F^*(y(1)) vs y^* + f/[2]^2", alg.f_up(&y1), alg.y_up_star().add(&corr)),
            ("F_*(y(1)) vs y_* + f/[2]^2", alg.f_down(&y1), alg.y_down_star().add(&corr)),
        ];
        for (what, lhs, rhs) in &routes {
            if lhs != rhs {
                return Ok(mismatch(what, lhs, rhs));
            }
        }
        let f = alg.f();
        let through_f = [
            ("x^* f vs x_* f", alg.x_up_star(), alg.x_down_star()),
            ("y^* f vs y_* f", alg.y_up_star(), alg.y_down_star()),
            ("y_bar f vs y_under f", alg.y_bar(), alg.y_under()),
        ];
        for (what, a, b) in through_f {
            let (lhs, rhs) = (alg.mul(a, &f), alg.mul(b, &f));
            if lhs != rhs {
                return Ok(mismatch(what, &lhs, &rhs));
            }
        }
        let mut x_pow = f.clone();
        for i in 0..=4u32 {
            let mut cur = x_pow.clone();
            for j in 0..=4u32 {
                let want = A11Elem::basis(BasisKey::F(i, j), r.one());
                if cur != want {
                    return Ok(mismatch(&format!("(x^*)^{i} (y^*)^{j} f"), &cur, &want));
                }
                cur = alg.mul(&cur, alg.y_up_star());
            }
            x_pow = alg.mul(&x_pow, alg.x_up_star());
        }
        let mut rng = Sampler::new(seed);
        for s in 0..samples {
            let poly = rng.xy_poly(&r, bound, 4);
            let plain = alg.plain_defect(&poly);
            let alt = alg.transparency_defect(&poly);
            if plain != alt {
                return Ok(Some(format!("sample {s}: defect formulas differ for S = {poly}")));
            }
        }
        Ok(None)
    })
}

/// Homogeneous elements of `E'` of degree `k`: `(l1 + l2)^i (l1 l2)^j`
/// with `i + 2j = k` and `i <= 6`.
fn homogeneous_monomials(k: i64) -> Vec<(u32, i64)> {
    (0..=6i64)
        .filter(|i| (k - i) % 2 == 0)
        .map(|i| (i as u32, (k - i) / 2))
        .collect()
}

/// `F^*(p) = q^(2k) F_*(p)` for homogeneous `p` of degree `k`, `|k| <= kmax`.
pub fn check_degree_shift(kmax: i64) -> VerifyReport {
    run_check("degree_shift", json!({"kmax": kmax}), || {
        let r = RationalFunctions;
        let alg = A11Algebra::new(r)?;
        for k in -kmax..=kmax {
            let mut sum = EPrimePoly::zero();
            for (n, (i, j)) in homogeneous_monomials(k).into_iter().enumerate() {
                let mono = EPrimePoly::monomial(r.one(), i, j);
                sum.add_term((i, j), r.from_i64(n as i64 + 1));
                let expanded = mono.expand(&r);
                if expanded.d1()? != k || !expanded.is_homogeneous_of_degree(k) {
                    return Ok(Some(format!("(l1 + l2)^{i} (l1 l2)^{j} is not homogeneous of degree {k}")));
                }
                let lhs = alg.f_up(&mono);
                let rhs = alg.f_down(&mono).scale(&r.q_pow(2 * k));
                if lhs != rhs {
                    return Ok(mismatch(&format!("F^* vs q^{} F_* on {mono}", 2 * k), &lhs, &rhs));
                }
            }
            let lhs = alg.f_up(&sum);
            let rhs = alg.f_down(&sum).scale(&r.q_pow(2 * k));
            if lhs != rhs {
                return Ok(mismatch(&format!("F^* vs q^{} F_* on {sum}", 2 * k), &lhs, &rhs));
            }
        }
        Ok(None)
    })
}

/// `F^*(x(i)) = F_*(x~(i))` and `F^*(y(i)) = F_*(y~(i))` for `1 <= i <= imax`.
pub fn check_tilde(imax: u32) -> VerifyReport {
    run_check("tilde", json!({"imax": imax}), || {
        let r = RationalFunctions;
        let alg = A11Algebra::new(r)?;
        for i in 1..=imax {
            let pairs: [(&str, LLPoly<QRat>, LLPoly<QRat>); 2] = [
                ("x", bold_x(&r, i), tilde_x(&r, i)),
                ("y", bold_y(&r, i), tilde_y(&r, i)),
            ];
            for (name, bold, tilde) in pairs {
                let lhs = alg.f_up(&to_eprime(&r, &bold)?);
                let rhs = alg.f_down(&to_eprime(&r, &tilde)?);
                if lhs != rhs {
                    return Ok(mismatch(&format!("F^*({name}({i})) vs F_*({name}~({i}))"), &lhs, &rhs));
                }
            }
        }
        Ok(None)
    })
}

/// Over `Q(zeta_m)` with `m | 2n`: the defects of `P_n` and `Q_n` vanish.
/// When `q^2 = 1` every sampled polynomial must be transparent as well.
pub fn check_transparent(n: u32, m: u32) -> VerifyReport {
    run_check("transparency", json!({"n": n, "m": m}), || {
        if m == 0 || !(2 * n as u64).is_multiple_of(m as u64) {
            return Err(Error::InvalidOrder { m, two_n: 2 * n as u64 });
        }
        let field = CyclotomicField::new(m);
        let alg = A11Algebra::new(field.clone())?;
        let p = XYPoly::embed(&field, &p_int(n as usize));
        let q = XYPoly::embed(&field, &q_int(n as usize));
        for (name, poly) in [("P", &p), ("Q", &q)] {
            let d = alg.transparency_defect(poly);
            if !d.is_zero() {
                return Ok(Some(format!("defect of {name}_{n} = {d}")));
            }
        }
        if order_of_q_squared(m) == 1 {
            let mut rng = Sampler::new(u64::from(m));
            for _ in 0..5 {
                let s = rng.xy_poly(&field, (6, 6), 4);
                let d = alg.transparency_defect(&s);
                if !d.is_zero() {
                    return Ok(Some(format!("q^2 = 1 but S = {s} has defect {d}")));
                }
            }
        }
        Ok(None)
    })
}

/// Passes when building the algebra over each `Q(zeta_m)` raises
/// `DenominatorVanishes`.
pub fn check_denominator_guard(orders: &[u32]) -> VerifyReport {
    run_check("denominator_guard", json!({"orders": orders}), || {
        for &m in orders {
            match A11Algebra::new(CyclotomicField::new(m)) {
                Err(Error::DenominatorVanishes { .. }) => {}
                Err(e) => return Ok(Some(format!("m = {m}: unexpected error {e}"))),
                Ok(_) => return Ok(Some(format!("m = {m}: structure constants accepted"))),
            }
        }
        Ok(None)
    })
}

/// Passes when `S` (parsed over `Q(zeta_m)`) has a nonzero defect.
pub fn check_not_transparent(s: &str, m: u32) -> VerifyReport {
    run_check("not_transparent", json!({"s": s, "m": m}), || {
        let field = CyclotomicField::new(m);
        let poly = XYPoly::parse(&field, s)?;
        let alg = A11Algebra::new(field)?;
        if alg.transparency_defect(&poly).is_zero() {
            Ok(Some(format!("S = {s} is transparent at m = {m}")))
        } else {
            Ok(None)
        }
    })
}

fn search_outcome<F: Field>(
    field: &F,
    n: Option<u32>,
    bound: (u64, u64),
    sub: TransparentSubspace<F::Elem>,
) -> Result<Option<String>> {
    let expected = expected_truncation(field, n, bound);
    let vectors: Vec<_> = expected
        .iter()
        .map(|p| coordinates(field, &sub.labels, p).expect("truncation lies below the bound"))
        .collect();
    if sub.equals_span(field, &vectors)? {
        return Ok(None);
    }
    let rank = linalg::rref(field, sub.labels.len(), &vectors)?.len();
    Ok(Some(format!(
        "nullspace has dimension {} over {}, expected truncation has dimension {rank}; found {}",
        sub.dim(),
        field.label(),
        sub.polys(field)
            .iter()
            .map(|p| format!("[{p}]"))
            .collect::<Vec<_>>()
            .join(", ")
    )))
}

/// Compares the transparent subspace below `bound` with the truncation of
/// `R[P_n, Q_n]`, `n` the order of `q^2`; `m = None` means generic `q`,
/// where only constants are expected. For `3 | n` nothing is asserted.
pub fn check_search(m: Option<u32>, bound: (u64, u64)) -> VerifyReport {
    let params = json!({"m": m, "bound": [bound.0, bound.1]});
    run_check("search", params, || match m {
        None => search_outcome(&RationalFunctions, None, bound, search_transparent_generic(bound)?),
        Some(m) => {
            let field = CyclotomicField::new(m);
            let n = order_of_q_squared(m);
            if n.is_multiple_of(3) {
                search_transparent(&field, bound)?;
                return Ok(None);
            }
            let sub = search_transparent(&field, bound)?;
            search_outcome(&field, Some(n), bound, sub)
        }
    })
}

fn round_trip<T: PartialEq + std::fmt::Display>(
    value: &T,
    parse: impl Fn(&str) -> std::result::Result<T, crate::error::ParseError>,
) -> Option<String> {
    let printed = value.to_string();
    match parse(&printed) {
        Ok(back) if &back == value => None,
        Ok(back) => Some(format!("`{printed}` re-parsed as `{back}`")),
        Err(e) => Some(format!("`{printed}` failed to parse: {e}")),
    }
}

/// Prints and re-parses a generated corpus of at least `count` values.
pub fn check_round_trip(seed: u64, count: usize) -> VerifyReport {
    run_check("round_trip", json!({"seed": seed, "count": count}), || {
        let mut rng = Sampler::new(seed);
        let r = RationalFunctions;
        let alg = A11Algebra::new(r)?;
        let cyc = CyclotomicField::new(10);
        let alg10 = A11Algebra::new(cyc.clone())?;
        let mut failures = Vec::new();
        let mut checked = 0usize;
        let mut note = |w: Option<String>| {
            checked += 1;
            failures.extend(w);
        };
        let rounds = count.div_ceil(8).max(1);
        for i in 0..rounds {
            let lq = rng.laurent();
            note(round_trip(&lq, LaurentQ::parse));
            let qr = rng.qrat();
            note(round_trip(&qr, QRat::parse));
            let z = cyc.zeta();
            let c = cyc
                .from_i64(rng.small_int(5))
                .add(&z.mul(&cyc.from_i64(rng.small_int(5))))
                .add(&z.mul(&z).mul(&cyc.inv(&cyc.from_i64(rng.gen_range(1, 4)))?));
            note(round_trip(&c, |s| cyc.parse_elem(s)));
            let k = i % 6 + 1;
            note(round_trip(&*p_int(k), |s| XYPoly::parse(&Integers, s)));
            let xy = rng.xy_poly(&r, (6, 4), 4).add(&XYPoly::constant(qr.clone()));
            note(round_trip(&xy, |s| XYPoly::parse(&r, s)));
            let ll = bold_y(&r, k as u32).add(&LLPoly::monomial(qr.clone(), -1, 2));
            note(round_trip(&ll, |s| LLPoly::parse(&r, s)));
            let a = alg.mul(&rng.a11(3), &rng.a11(3));
            note(round_trip(&a, |s| A11Elem::parse(&r, s)));
            let b = alg10.mul(alg10.y_bar(), &A11Elem::basis(BasisKey::AC(k as i64 - 3, 1), c));
            note(round_trip(&b, |s| A11Elem::parse(&cyc, s)));
        }
        if checked < count {
            return Ok(Some(format!("only {checked} values generated")));
        }
        Ok(failures.into_iter().next())
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::verify::Status;

    #[test]
    fn cheap_checks_pass() {
        for r in [
            check_elementary_sums(),
            check_elementary_sums_mutation(),
            check_known_values(8),
            check_power_sums(6, 2, 3),
            check_composition(2, 2),
            check_leading_terms(2),
            check_degree_shift(2),
            check_tilde(2),
            check_transparent(5, 10),
            check_denominator_guard(&[4, 8]),
            check_round_trip(1, 16),
        ] {
            assert!(r.passed(), "{}", r.summary_line());
        }
    }

    #[test]
    fn mutated_table_fails_with_witness() {
        let e: Vec<_> = (0..=7).map(|i| e_coeff(i).unwrap()).collect();
        let r = check_elementary_sums_with("elementary_sums", &e, &corrupted_f_table());
        assert_eq!(r.status, Status::Fail);
        assert!(r.witness.unwrap().contains("f_3"));
    }

    #[test]
    fn invalid_and_vanishing_orders_are_errors() {
        let r = check_transparent(5, 7);
        assert_eq!(r.status, Status::Error);
        assert!(r.witness.unwrap().contains("does not divide"));
        let r = check_transparent(2, 4);
        assert_eq!(r.status, Status::Error);
        assert!(r.witness.unwrap().contains("vanishes"));
    }

    #[test]
    fn negative_controls() {
        assert!(check_not_transparent("x", 10).passed());
        assert_eq!(check_not_transparent(&p_int(5).to_string(), 10).status, Status::Fail);
        assert_eq!(check_not_transparent("1", 10).status, Status::Fail);
        assert_eq!(check_not_transparent("x +", 10).status, Status::Error);
    }

    #[test]
    fn xy_defect_is_nonzero_and_formulas_agree() {
        let r = RationalFunctions;
        let alg = A11Algebra::new(r).unwrap();
        let xy = XYPoly::parse(&r, "x*y").unwrap();
        let d = alg.transparency_defect(&xy);
        assert!(!d.is_zero());
        assert_eq!(d, alg.plain_defect(&xy));
    }

    #[test]
    fn leading_terms_examples() {
        // the constant 7 * 14 has no l1 term
        let r = Integers;
        let prod = bold_x(&r, 0).mul(&bold_y(&r, 0));
        assert_eq!(prod, LLPoly::constant(BigInt::from(98)));
    }
}
