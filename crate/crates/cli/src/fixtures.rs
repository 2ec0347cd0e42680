//! Named worked examples run by `hopf-deform fixtures`.

use hopf_deform_core::braided::{
    braided_commutator, operator_kernel, operator_rank, quantum_symmetrizer, DiagonalDatum, TensorElement, TensorWord,
};
use hopf_deform_core::cocycles::{
    certify_zeta_family, check_dual_cocycle, coboundary_preimage, cohomology_dims, connecting_delta,
    deform_multiplication_with, evaluation_sum, exp_functional, f_l, h_cohomology_dim, hochschild_differential,
    is_mult_cocycle_with, kac_sum, kunneth_check, psi_iso, tensor_inverse, zeta_cocycle, AugmentedAlgebra,
};
use hopf_deform_core::fixtures::{
    bdg, coprime, dual_taft, dual_taft_sigma, mixed_orders_z6, params, quantum_plane_z6, taft, taft_closed_form,
    taft_sigma, two_variable,
};
use hopf_deform_core::hopfcore::{
    coradical_filtration, structure_differences, tensor_add_scaled, verify_bialgebra, Functional,
    HopfAlgebra, TensorVec, VerifyMode,
};
use hopf_deform_core::linalg::rank;
use hopf_deform_core::liftings::{
    build_irrep, build_k_and_f, build_lifting, convolve_f, dual_invariants, inverse_f, lifting_from_f, theta,
    theta_compose, LiftingParams, Presentation,
};
use hopf_deform_core::scalars::{qbinom, CyclotomicField, Scalar};
use serde_json::json;

use crate::commands::{Failure, Settings};
use crate::exec::Threaded;
use crate::report::{Certificate, Report};

type Example = fn(&mut Ctx) -> Result<(), Failure>;

const EXAMPLES: &[(&str, Example)] = &[
    ("taft-deform", taft_deform),
    ("dual-deform", dual_deform),
    ("dual-deform-p2-1", dual_deform_p2_one),
    ("truncated-cohomology", truncated_cohomology),
    ("zeta-family", zeta_family),
    ("q-identities", q_identities),
    ("theta", theta_example),
    ("bdg-dual", bdg_dual),
    ("coprime-dual", coprime_dual),
    ("irreps", irreps),
    ("nichols-kernels", nichols_kernels),
    ("kunneth", kunneth),
    ("delta", delta),
];

pub fn names() -> Vec<&'static str> {
    EXAMPLES.iter().map(|(n, _)| *n).collect()
}

struct Ctx<'a> {
    name: &'static str,
    report: &'a mut Report,
    exec: &'a Threaded,
    seed: u64,
}

impl Ctx<'_> {
    fn cert(&mut self, what: impl AsRef<str>, passed: bool) {
        self.report.certify(Certificate::exact(format!("{}: {}", self.name, what.as_ref()), passed));
    }

    fn cert_with(&mut self, what: impl AsRef<str>, passed: bool, mode: String, witness: Option<String>) {
        self.report.certify(
            Certificate { name: format!("{}: {}", self.name, what.as_ref()), passed, mode, witness: None }
                .with_witness(witness),
        );
    }

    fn axioms(&mut self, label: &str, h: &HopfAlgebra, rep: &hopf_deform_core::hopfcore::AxiomReport) {
        for c in &rep.checks {
            let w = c.witnesses.first().map(|w| {
                let labels: Vec<String> = w.indices.iter().map(|&i| h.label(i).to_string()).collect();
                format!("({}): {}", labels.join(", "), w.detail)
            });
            self.cert_with(format!("{label} {}", c.name), c.passed(), rep.mode.to_string(), w);
        }
    }

    fn result(&mut self, key: &str, v: serde_json::Value) {
        let entry = self.report.results.entry(self.name.to_string()).or_insert_with(|| json!({}));
        entry[key] = v;
    }
}

/// Runs one example, or all of them when none is named.
pub fn run(r: &mut Report, s: &Settings, exec: &Threaded) -> Result<(), Failure> {
    let selected: Vec<&(&str, Example)> = match &s.example {
        None => EXAMPLES.iter().collect(),
        Some(name) if name == "all" => EXAMPLES.iter().collect(),
        Some(name) => match EXAMPLES.iter().find(|(n, _)| n == name) {
            Some(e) => vec![e],
            None => return Err(Failure::Input(format!("unknown example {name:?}; expected one of {}", names().join(", ")))),
        },
    };
    for (name, f) in selected {
        let mut ctx = Ctx { name, report: r, exec, seed: s.seed.unwrap_or(0) };
        f(&mut ctx)?;
    }
    Ok(())
}

fn int(v: i64) -> Scalar {
    Scalar::from_i64(v)
}

fn bosonization(d: &DiagonalDatum) -> Result<HopfAlgebra, Failure> {
    Ok(Presentation::bosonization(d).build()?)
}

fn taft_deform(c: &mut Ctx) -> Result<(), Failure> {
    let d = taft(3, 2);
    let h = bosonization(&d)?;
    let a = int(1);
    let sigma = taft_sigma(&d, &h, &a);
    let check = is_mult_cocycle_with(&sigma, &h, c.exec);
    c.cert_with("sigma = 1 + zeta is a multiplicative cocycle", check.holds, "exact".into(), check.witness.clone());
    let def = deform_multiplication_with(&h, &sigma, VerifyMode::Full, c.exec)?;
    let closed = taft_closed_form(&d, &h, &a);
    let dim = h.dim();
    let mut mismatch = None;
    for i in 0..dim {
        for j in 0..dim {
            if mismatch.is_none() && def.hopf.mul_basis(i, j) != &closed[i * dim + j][..] {
                mismatch = Some(format!(
                    "{} * {}: got {}, closed form {}",
                    h.label(i),
                    h.label(j),
                    h.render(def.hopf.mul_basis(i, j)),
                    h.render(&closed[i * dim + j])
                ));
            }
        }
    }
    c.cert_with(format!("m_sigma equals the closed form on all {} pairs", dim * dim), mismatch.is_none(), "full".into(), mismatch);
    let x = h.generator_index(0);
    let x2 = def.hopf.mul_basis(x, x).to_vec();
    let x3 = def.hopf.mul(&x2, &[(x, Scalar::one())].to_vec());
    let g3 = h.group_index(&d.group().element(&[3]));
    let expected: Vec<_> = vec![(h.unit_index(), a.clone()), (g3, -&a)];
    let mut sorted = expected.clone();
    sorted.sort_by_key(|(i, _)| *i);
    c.cert("x^3 = a(1 - g^3) in the deformed algebra", x3 == sorted);
    c.axioms("deformed", &def.hopf, &def.report);
    let dims = coradical_filtration(&def.hopf).dims;
    let graded = coradical_filtration(&h).dims;
    c.cert("coradical filtration dims are [6, 12, 18] and match the graded algebra", dims == [6, 12, 18] && dims == graded);
    let lifted = Presentation::of_params(&d, &params(&[-1], None)).build()?;
    c.cert("deformed algebra equals the lifting with a_11 = -a", structure_differences(&def.hopf, &lifted, 3).is_empty());
    c.result("dim", json!(dim));
    c.result("coradical_dims", json!(dims));
    c.result("x^3", json!(h.render(&x3)));
    Ok(())
}

fn dual_report(c: &mut Ctx, n: u32, p1: u32, p2: u32) -> Result<(), Failure> {
    let d = dual_taft(n, p1, p2);
    let h = bosonization(&d)?;
    let sigma = dual_taft_sigma(&d, &h);
    let sinv = tensor_inverse(&h, &sigma)?;
    let check = check_dual_cocycle(&h, &sigma);
    c.cert_with("sigma satisfies the dual cocycle law", check.twist_law, "full".into(), check.witness.clone());
    c.result("reversed_law", json!(check.reversed_law));
    c.result("dim", json!(h.dim()));
    let twisted: Vec<TensorVec> =
        (0..h.dim()).map(|b| h.tensor_mul(&h.tensor_mul(&sigma, h.comult_basis(b)), &sinv)).collect();
    let x = h.generator_index(0);
    c.cert("Delta_sigma(x) = Delta(x)", sorted(twisted[x].clone()) == sorted(h.comult_basis(x).clone()));
    let g = h.group_index(&d.group().element(&[1]));
    let gg: TensorVec = vec![((g, g), Scalar::one())];
    let zeta: TensorVec = sigma.iter().filter(|(k, _)| *k != (h.unit_index(), h.unit_index())).cloned().collect();
    let coef = &Scalar::one() - d.root((p2 * n) as i64);
    let expected = tensor_add_scaled(&gg, &h.tensor_mul(&zeta, &gg), &coef);
    c.cert("Delta_sigma(g) = g(x)g + (1 - alpha^{p2 n}) zeta (g(x)g)", sorted(twisted[g].clone()) == sorted(expected));
    c.result("Delta_sigma(g)", json!(h.render_tensor(&twisted[g])));
    let deformed = h.with_comult(twisted);
    let rep = verify_bialgebra(&deformed, VerifyMode::Full);
    c.axioms("(A, m, Delta_sigma) bialgebra", &deformed, &rep);
    Ok(())
}

fn sorted(mut t: TensorVec) -> TensorVec {
    t.retain(|(_, v)| !v.is_zero());
    t.sort_by_key(|(k, _)| *k);
    t
}

fn dual_deform(c: &mut Ctx) -> Result<(), Failure> {
    dual_report(c, 3, 2, 2)
}

fn dual_deform_p2_one(c: &mut Ctx) -> Result<(), Failure> {
    dual_report(c, 3, 2, 1)
}

fn truncated_cohomology(c: &mut Ctx) -> Result<(), Failure> {
    let mut dims = Vec::new();
    for n in 2..=5u32 {
        let a = AugmentedAlgebra::truncated_polynomial(n);
        let h2 = h_cohomology_dim(&a, 2, false)?;
        dims.push(h2);
        c.cert(format!("n = {n}: dim H^2 = 1"), h2 == 1);
        let fnn = f_l(&a, n as usize);
        let rep = hochschild_differential(&fnn, &a).is_zero() && coboundary_preimage(&fnn, &a)?.is_none();
        c.cert(format!("n = {n}: f_{n} is a cocycle and not a coboundary"), rep);
        for l in 2..n as usize {
            let f = f_l(&a, l);
            let mut g = Functional::zero(1, a.dim());
            g.set(&[l], int(-1));
            c.cert(format!("n = {n}: f_{l} = d g with g(x^{l}) = -1"), hochschild_differential(&g, &a) == f);
        }
        let cd = cohomology_dims(&a, 2, false)?;
        c.cert(format!("n = {n}: the f_l span the 2-cocycles"), cd.cocycles == n as usize - 1);
    }
    c.result("h2_dims", json!(dims));
    Ok(())
}

fn zeta_family(c: &mut Ctx) -> Result<(), Failure> {
    let d = quantum_plane_z6();
    let h = bosonization(&d)?;
    let z1 = zeta_cocycle(&d, &h, 0, &int(1));
    let z2 = zeta_cocycle(&d, &h, 1, &int(1));
    let rep = certify_zeta_family(&h, &[z1.clone(), z2.clone()])?;
    for (i, ok) in rep.hochschild.iter().enumerate() {
        c.cert(format!("d zeta_{} = 0", i + 1), *ok);
    }
    c.cert("A_l is convolution-commutative", rep.left_commutative);
    c.cert("A_r is convolution-commutative", rep.right_commutative);
    for (a, b) in [(1, 1), (2, -1), (0, 3)] {
        let f = z1.scale(&int(a)).add(&z2.scale(&int(b)));
        let sigma = exp_functional(&f, &h)?;
        let check = is_mult_cocycle_with(&sigma, &h, c.exec);
        c.cert_with(format!("e^({a} zeta_1 + {b} zeta_2) is a multiplicative cocycle"), check.holds, "exact".into(), check.witness);
    }
    let sigma = exp_functional(&z1.add(&z2), &h)?;
    let mode = VerifyMode::Sampled { seed: c.seed, count: 500 };
    let def = deform_multiplication_with(&h, &sigma, mode, c.exec)?;
    c.axioms("deformation by e^(zeta_1 + zeta_2):", &def.hopf, &def.report);
    c.result("dim", json!(h.dim()));
    Ok(())
}

fn q_identities(c: &mut Ctx) -> Result<(), Failure> {
    let (mut kac, mut kac_ok, mut ev, mut ev_ok) = (0usize, true, 0usize, true);
    for e in 1..=8u32 {
        for k in 1..=e {
            if gcd(k, e) != 1 {
                continue;
            }
            let q = Scalar::root(e, k as i64);
            for i in 0..=8 {
                for kk in 0..=8 {
                    for beta in 0..=(i + kk) {
                        kac += 1;
                        kac_ok &= kac_sum(i, kk, beta, &q) == qbinom(i + kk, beta, &q);
                    }
                }
            }
            let n = e as i64;
            for r in 0..n {
                for s in 0..n {
                    let p = 2 * n - r - s;
                    if n < 2 || !(0..n).contains(&p) {
                        continue;
                    }
                    ev += 2;
                    ev_ok &= evaluation_sum(n, s, p, &q) == Scalar::one() && evaluation_sum(n - r, s, p, &q) == Scalar::one();
                }
            }
        }
    }
    c.cert(format!("Kac identity on {kac} parameter sets"), kac_ok);
    c.cert(format!("evaluation identity on {ev} parameter sets"), ev_ok);
    Ok(())
}

fn gcd(a: u32, b: u32) -> u32 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

fn theta_example(c: &mut Ctx) -> Result<(), Failure> {
    let cases: [(&str, DiagonalDatum, LiftingParams, LiftingParams); 3] = [
        ("taft(3, 2)", taft(3, 2), params(&[5], None), params(&[-2], None)),
        ("two_variable(3)", two_variable(3), params(&[0, 0], Some(4)), params(&[0, 0], Some(-1))),
        ("bdg(3)", bdg(3), params(&[1, 2], Some(3)), params(&[4, -1], Some(5))),
    ];
    for (label, d, f1, f2) in cases {
        let cap = 2 * d.ns().iter().copied().max().unwrap_or(2) as usize;
        let k1 = build_k_and_f(&d, &f1, cap)?;
        let k2 = build_k_and_f(&d, &f2, cap)?;
        let mut gen_ok = true;
        for (i, z) in k1.elements.iter().enumerate() {
            let v = &k1.values[i];
            let expected = z.add(&k1.tga.one().scale(v)).sub(&k1.tga.group(&k1.degrees[i]).scale(v));
            gen_ok &= theta(&k1, z)? == expected;
        }
        c.cert(format!("{label}: Theta(f)(z) = z + f(z)(1 - h)"), gen_ok);
        let k12 = build_k_and_f(&d, &convolve_f(&k1, &k2)?, cap)?;
        let mut comp_ok = true;
        for z in &k1.elements {
            comp_ok &= theta(&k12, z)? == theta_compose(&k1, &k2, z)?;
        }
        c.cert(format!("{label}: Theta(f1 * f2) = Theta(f1) Theta(f2) on generators"), comp_ok);
        let mut neg = f1.clone();
        neg.diag.iter_mut().for_each(|v| *v = -&*v);
        neg.link.values_mut().for_each(|v| *v = -&*v);
        c.cert(format!("{label}: f s = -f"), inverse_f(&k1)? == neg);
        let (_, cert) = lifting_from_f(&d, &f1)?;
        c.cert_with(format!("{label}: U(D, f) equals H(a) with a = f(z)"), cert.passed(), "full".into(), cert.differences.first().cloned());
    }
    Ok(())
}

fn bdg_dual(c: &mut Ctx) -> Result<(), Failure> {
    let d = bdg(3);
    let l = build_lifting(&d, &params(&[1, 1], Some(1)), VerifyMode::default_for(81, c.seed))?;
    let rep = dual_invariants(&l);
    c.cert("dim 81", l.hopf.dim() == 81);
    c.axioms("lifting", &l.hopf, &l.report);
    c.cert("exactly one grouplike in the dual", rep.grouplikes.len() == 1);
    c.cert("grouplikes agree with enumerated algebra maps", rep.grouplikes == rep.enumerated_grouplikes);
    c.cert("dual is not pointed", !rep.dual_pointed);
    c.result("grouplikes_of_dual", json!(rep.grouplikes.len()));
    c.result("dual_pointed", json!(rep.dual_pointed));
    c.result("radical_dim", json!(rep.radical_dim));
    Ok(())
}

fn coprime_dual(c: &mut Ctx) -> Result<(), Failure> {
    let mut counts = Vec::new();
    for (r, s, expected) in [(3u32, 2u32, 2usize), (2, 3, 1)] {
        let d = coprime(r, s);
        let dim = Presentation::of_params(&d, &params(&[1, 1], Some(1))).dim();
        let l = build_lifting(&d, &params(&[1, 1], Some(1)), VerifyMode::default_for(dim, c.seed))?;
        let rep = dual_invariants(&l);
        c.cert(format!("r = {r}, s = {s}: {expected} grouplike(s) in the dual"), rep.grouplikes.len() == expected);
        c.cert(format!("r = {r}, s = {s}: grouplikes agree with enumeration"), rep.grouplikes == rep.enumerated_grouplikes);
        counts.push(json!({ "r": r, "s": s, "dim": dim, "grouplikes_of_dual": rep.grouplikes.len() }));
    }
    c.result("cases", json!(counts));
    Ok(())
}

fn irreps(c: &mut Ctx) -> Result<(), Failure> {
    for p in [3u32, 5] {
        let field = CyclotomicField::new(p).map_err(|e| Failure::Input(e.to_string()))?;
        let mut dims = Vec::new();
        for r in 1..=p {
            let rep = build_irrep(&field, p, r)?;
            dims.push(rep.g_mat.len());
            c.cert(format!("p = {p}, r = {r}: relations and y_i formula hold"), rep.relations_hold());
            c.cert(format!("p = {p}, r = {r}: span dimension r^2"), rep.irreducible());
        }
        c.cert(format!("p = {p}: dims are 1..p"), dims == (1..=p as usize).collect::<Vec<_>>());
    }
    Ok(())
}

fn nichols_kernels(c: &mut Ctx) -> Result<(), Failure> {
    for (label, d) in [("taft(3, 2)", taft(3, 2)), ("quantum_plane_z6", quantum_plane_z6()), ("mixed_orders_z6", mixed_orders_z6()), ("two_variable(3)", two_variable(3))] {
        for n in 2..=4usize {
            let sym = quantum_symmetrizer(&d, n, 20_000)?;
            c.cert(format!("{label}: dim im S_{n} = PBW count"), operator_rank(&sym) == d.pbw_count(n));
            if n == 2 {
                let mut gens = Vec::new();
                for i in 0..d.rank() {
                    if d.n(i) == 2 {
                        gens.push(TensorElement::word(TensorWord(vec![i as u8; 2])));
                    }
                    for j in (i + 1)..d.rank() {
                        gens.push(braided_commutator(&d, &TensorElement::generator(i), &TensorElement::generator(j)));
                    }
                }
                let mut index = std::collections::BTreeMap::new();
                let vecs: Vec<_> = gens.iter().map(|g| crate::commands::tensor_vec(g, &mut index)).collect();
                let ok = gens.iter().all(|g| sym.apply(g).is_zero()) && rank(&vecs) == operator_kernel(&sym).len();
                c.cert(format!("{label}: ker S_2 is spanned by q-commutators"), ok);
            }
            for i in 0..d.rank() {
                if d.n(i) as usize == n {
                    let w = TensorElement::word(TensorWord(vec![i as u8; n]));
                    c.cert(format!("{label}: x{}^(tensor {n}) lies in ker S_{n}", i + 1), sym.apply(&w).is_zero());
                }
            }
        }
    }
    Ok(())
}

fn kunneth(c: &mut Ctx) -> Result<(), Failure> {
    for (label, d) in [("quantum_plane_z6", quantum_plane_z6()), ("mixed_orders_z6", mixed_orders_z6())] {
        let rows = kunneth_check(&d, 2)?;
        for row in &rows {
            c.cert(format!("{label}: H^{} direct = product", row.level), row.direct == row.product);
        }
        c.result(label, json!(rows.iter().map(|r| json!({"level": r.level, "direct": r.direct, "product": r.product})).collect::<Vec<_>>()));
    }
    Ok(())
}

fn delta(c: &mut Ctx) -> Result<(), Failure> {
    let d = taft(3, 2);
    let h = bosonization(&d)?;
    for v in [0i64, 1, 5, -2] {
        let f = params(&[v], None);
        let r = connecting_delta(&d, &f)?;
        c.cert(format!("f(z) = {v}: class nonzero iff f(z) != 0"), r.class_zero == (v == 0));
        c.cert(format!("f(z) = {v}: induced cochain is a cocycle vanishing on K+"), r.kills_k_plus && r.is_cocycle);
        let psi = psi_iso(&r.cocycle, &d, &h)?;
        let zeta = zeta_cocycle(&d, &h, 0, &int(-v));
        c.cert(format!("f(z) = {v}: Psi^2 delta(f) = zeta with scale -f(z)"), psi == zeta);
        if v != 0 {
            let sigma = Functional::unit(&h, 2).add(&psi);
            let def = deform_multiplication_with(&h, &sigma, VerifyMode::Full, c.exec)?;
            let lifted = Presentation::of_params(&d, &f).build()?;
            c.cert(format!("f(z) = {v}: the realizing deformation is H(a = f(z))"), structure_differences(&def.hopf, &lifted, 3).is_empty());
        }
    }
    Ok(())
}
