use std::collections::BTreeMap;

use serde_json::{json, Value};
use zetakit::arith_equiv::{
    self, factor_degrees_mod_p, gassmann_check, gl32_demo, group_closure, partial_dedekind_zeta,
    splitting_types_equal, NumberFieldPoly, Permutation, Subgroup, SplittingType,
};
use zetakit::bc_system::{
    check_iso_candidate, gibbs_state, gibbs_state_direct, partition_function,
    time_evolution_phase, FiniteLevelSystem, IsoCandidate, Observable,
};
use zetakit::dirichlet::{l_fingerprint, l_series, unit_group_structure};
use zetakit::ff_curves::{
    count_range, make_extension_field, predict_counts, zeta_numerator, HyperellipticCurve,
    HOWE_MINUS, HOWE_PLUS,
};
use zetakit::numeric::{bloch_wigner, dilog};
use zetakit::spectral_torus::{
    eisenstein, epstein_accelerated, epstein_direct, paper_constant_check,
    spectral_zeta_flat_torus, torus_length_bound, BinaryQuadraticForm, Lattice2D, UpperHalfPoint,
    DEFAULT_GRID,
};
use zetakit::{ComplexValue, PrecisionPolicy};

use crate::args::*;
use crate::output::{complex, complex_v, fields, list, num, nums, object, real, real_v, table};
use crate::CliError;

pub type Outcome = Result<(Value, String), CliError>;

fn usage(msg: impl Into<String>) -> CliError {
    CliError::Usage(msg.into())
}

fn wrong_demo(cmd: &str, d: Demo, allowed: &str) -> CliError {
    usage(format!("{cmd} has no `{d:?}` preset (available: {allowed})").to_lowercase())
}

fn arity<'a, T>(name: &str, v: &'a List<T>, n: usize) -> Result<&'a [T], CliError> {
    if v.0.len() != n {
        return Err(usage(format!("--{name} takes {n} comma-separated values, got {}", v.0.len())));
    }
    Ok(&v.0)
}

fn policy(cli: &Cli) -> Result<PrecisionPolicy, CliError> {
    Ok(match cli.tol {
        Some(t) => PrecisionPolicy::with_tolerance(t)?,
        None => PrecisionPolicy::default(),
    })
}

pub fn dispatch(cli: &Cli) -> Outcome {
    match &cli.command {
        Command::CurveCount(a) => curve_count(a),
        Command::CurveZeta(a) => curve_zeta(a),
        Command::SplitCompare(a) => split_compare(cli, a),
        Command::Dedekind(a) => dedekind(cli, a),
        Command::Gassmann(a) => gassmann(a),
        Command::BcAct(a) => bc_act(a),
        Command::BcState(a) => bc_state(cli, a),
        Command::BcCheckIso(a) => bc_check_iso(cli, a),
        Command::Lseries(a) => lseries(cli, a),
        Command::LFingerprint(a) => fingerprint(cli, a),
        Command::Epstein(a) => epstein(a),
        Command::Eisenstein(a) => eisenstein_cmd(a),
        Command::Dilog(a) => dilog_cmd(a),
        Command::TorusZeta(a) => torus_zeta(a),
        Command::TorusDistance(a) => torus_distance(cli, a),
        Command::PaperCheck => paper_check(),
    }
}

fn curves(cmd: &str, a: &CurveArgs) -> Result<Vec<HyperellipticCurve>, CliError> {
    Ok(match (a.demo, &a.p, &a.f) {
        (Some(Demo::Howe), _, _) => vec![
            HyperellipticCurve::from_high_to_low(3, &HOWE_PLUS)?,
            HyperellipticCurve::from_high_to_low(3, &HOWE_MINUS)?,
        ],
        (Some(d), _, _) => return Err(wrong_demo(cmd, d, "howe")),
        (None, Some(p), Some(f)) => vec![HyperellipticCurve::from_high_to_low(*p, &f.0)?],
        _ => return Err(usage("need --p and --f, or --demo howe")),
    })
}

fn curve_label(c: &HyperellipticCurve) -> String {
    let hi: Vec<i64> = c.coeffs().iter().rev().copied().collect();
    format!("y^2 = f(x), f = [{}] over F_{}, genus {}", list(&hi), c.base_p(), c.genus())
}

fn curve_head(c: &HyperellipticCurve) -> Vec<(&'static str, Value)> {
    let hi: Vec<i64> = c.coeffs().iter().rev().copied().collect();
    vec![
        ("p", num(c.base_p())),
        ("coefficients", nums(&hi)),
        ("genus", num(c.genus())),
    ]
}

fn curve_count(a: &CurveArgs) -> Outcome {
    let mut out = Vec::new();
    let mut text = Vec::new();
    for c in curves("curve-count", a)? {
        let n = a.n.unwrap_or(2 * c.genus() + 3);
        if n == 0 {
            return Err(usage("--n must be positive"));
        }
        let counts = count_range(&c, n)?;
        let mut rows = Vec::new();
        let mut json_rows = Vec::new();
        for (k, count) in (1..=n).zip(counts) {
            let field = make_extension_field(c.base_p(), k)?;
            let modulus: Vec<u64> = field.modulus().iter().rev().copied().collect();
            rows.push(vec![k.to_string(), count.to_string(), list(&modulus)]);
            json_rows.push(object(vec![
                ("n", num(k)),
                ("count", num(count)),
                ("field_modulus", nums(&modulus)),
            ]));
        }
        let mut head = curve_head(&c);
        head.push(("counts", Value::Array(json_rows)));
        out.push(object(head));
        text.push(format!("{}\n{}", curve_label(&c), table(&["n", "N_n", "F_{p^n} modulus"], &rows)));
    }
    Ok((json!({ "curves": out }), text.join("\n\n")))
}

fn poly_text(coeffs: &[i64]) -> String {
    let mut terms = Vec::new();
    for (k, &c) in coeffs.iter().enumerate() {
        if c == 0 {
            continue;
        }
        let mag = c.unsigned_abs();
        let body = match (k, mag) {
            (0, _) => mag.to_string(),
            (1, 1) => "T".into(),
            (1, _) => format!("{mag}T"),
            (_, 1) => format!("T^{k}"),
            _ => format!("{mag}T^{k}"),
        };
        let sign = if c < 0 { "-" } else { "+" };
        if terms.is_empty() {
            terms.push(if c < 0 { format!("-{body}") } else { body });
        } else {
            terms.push(format!("{sign} {body}"));
        }
    }
    terms.join(" ")
}

fn curve_zeta(a: &CurveArgs) -> Outcome {
    let mut out = Vec::new();
    let mut text = Vec::new();
    for c in curves("curve-zeta", a)? {
        let zn = zeta_numerator(&c)?;
        let m = a.n.unwrap_or(2 * c.genus() + 3);
        let predicted = predict_counts(&zn, m);
        let mut head = curve_head(&c);
        head.push(("numerator", nums(zn.coeffs())));
        head.push(("q", num(zn.q())));
        head.push(("functional_equation", Value::Bool(zn.satisfies_functional_equation())));
        head.push(("predicted_counts", nums(&predicted)));
        out.push(object(head));
        let rows: Vec<Vec<String>> = predicted
            .iter()
            .enumerate()
            .map(|(i, v)| vec![(i + 1).to_string(), v.to_string()])
            .collect();
        text.push(format!(
            "{}\n{}\n{}",
            curve_label(&c),
            fields(&[
                ("P(T)", poly_text(zn.coeffs())),
                ("functional equation", zn.satisfies_functional_equation().to_string()),
            ]),
            table(&["n", "predicted N_n"], &rows)
        ));
    }
    Ok((json!({ "curves": out }), text.join("\n\n")))
}

fn number_field(c: &[i64]) -> Result<NumberFieldPoly, CliError> {
    Ok(NumberFieldPoly::from_high_to_low(c)?)
}

fn pair(cmd: &str, demo: Option<Demo>) -> Result<Option<(Vec<i64>, Vec<i64>)>, CliError> {
    Ok(match demo {
        None => None,
        Some(Demo::Perlis) => Some((arith_equiv::PERLIS_K.to_vec(), arith_equiv::PERLIS_L.to_vec())),
        Some(Demo::Komatsu) => {
            Some((arith_equiv::KOMATSU_K.to_vec(), arith_equiv::KOMATSU_L.to_vec()))
        }
        Some(d) => return Err(wrong_demo(cmd, d, "perlis, komatsu")),
    })
}

fn splitting_json(t: &SplittingType) -> Value {
    object(vec![
        ("clean", Value::Bool(t.is_clean())),
        ("degrees", nums(&t.degrees)),
    ])
}

fn split_compare(cli: &Cli, a: &SplitArgs) -> Outcome {
    let (fc, gc) = match pair("split-compare", a.demo)? {
        Some(p) => p,
        None => match (&a.f, &a.g) {
            (Some(f), Some(g)) => (f.0.clone(), g.0.clone()),
            _ => return Err(usage("need --f and --g, or --demo")),
        },
    };
    let (f, g) = (number_field(&fc)?, number_field(&gc)?);
    let bound = cli.bound.unwrap_or(arith_equiv::DEFAULT_BOUND);
    let r = splitting_types_equal(&f, &g, bound)?;
    let mismatch = r.first_mismatch.map_or(Value::Null, num);
    let mut payload = vec![
        ("f", nums(&fc)),
        ("g", nums(&gc)),
        ("bound", num(bound)),
        ("agree", Value::Bool(r.agree)),
        ("first_mismatch", mismatch),
        ("skipped", nums(&r.skipped)),
        ("compared", num(r.compared)),
    ];
    let mut lines = vec![
        ("f", list(&fc)),
        ("g", list(&gc)),
        ("bound", bound.to_string()),
        ("agree", r.agree.to_string()),
        ("first mismatch", r.first_mismatch.map_or("none".into(), |p| p.to_string())),
        ("skipped", list(&r.skipped)),
        ("compared primes", r.compared.to_string()),
    ];
    if let Some(p) = a.prime {
        let tf = factor_degrees_mod_p(&f, p)?;
        let tg = factor_degrees_mod_p(&g, p)?;
        payload.push((
            "at_prime",
            object(vec![("p", num(p)), ("f", splitting_json(&tf)), ("g", splitting_json(&tg))]),
        ));
        let show = |t: &SplittingType| {
            if t.is_clean() {
                format!("({})", list(&t.degrees))
            } else {
                "ramified or singular".into()
            }
        };
        lines.push(("f mod p", show(&tf)));
        lines.push(("g mod p", show(&tg)));
    }
    Ok((object(payload), fields(&lines)))
}

fn dedekind(cli: &Cli, a: &DedekindArgs) -> Outcome {
    let polys = match pair("dedekind", a.demo)? {
        Some((f, g)) => vec![f, g],
        None => vec![a.f.as_ref().ok_or_else(|| usage("need --f or --demo"))?.0.clone()],
    };
    let bound = cli.bound.unwrap_or(arith_equiv::DEFAULT_BOUND);
    let mut out = Vec::new();
    let mut rows = Vec::new();
    for c in polys {
        let v = partial_dedekind_zeta(&number_field(&c)?, a.s, bound)?;
        rows.push(vec![list(&c), real(v)]);
        out.push(object(vec![("coefficients", nums(&c)), ("value", real_v(v))]));
    }
    let head = format!("s = {}, clean primes p <= {bound}", real(a.s));
    Ok((
        json!({ "s": real(a.s), "bound": bound.to_string(), "fields": out }),
        format!("{head}\n{}", table(&["f", "partial zeta"], &rows)),
    ))
}

fn perms(v: &Value, what: &str) -> Result<Vec<Permutation>, CliError> {
    let arr = v.as_array().ok_or_else(|| usage(format!("{what} must be an array of image arrays")))?;
    arr.iter()
        .map(|p| {
            let images = p
                .as_array()
                .and_then(|xs| xs.iter().map(|x| x.as_u64().map(|x| x as usize)).collect::<Option<Vec<_>>>())
                .ok_or_else(|| usage(format!("{what}: each permutation is an array of images")))?;
            Ok(Permutation::from_images(images)?)
        })
        .collect()
}

fn subgroup(group: &zetakit::arith_equiv::PermGroup, v: &Value, what: &str) -> Result<Subgroup, CliError> {
    if let Some(g) = v.get("generators") {
        Ok(Subgroup::from_generators(group, perms(g, what)?)?)
    } else if let Some(e) = v.get("elements") {
        Ok(Subgroup::from_elements(group, &perms(e, what)?)?)
    } else {
        Err(usage(format!("{what} needs \"generators\" or \"elements\"")))
    }
}

fn gassmann(a: &GassmannArgs) -> Outcome {
    let (group, h1, h2) = match (a.demo, &a.group) {
        (Some(Demo::Gl32), _) => gl32_demo()?,
        (Some(d), _) => return Err(wrong_demo("gassmann", d, "gl32")),
        (None, Some(path)) => {
            let text = std::fs::read_to_string(path)
                .map_err(|e| usage(format!("cannot read {}: {e}", path.display())))?;
            let v: Value = serde_json::from_str(&text).map_err(|e| usage(format!("bad group JSON: {e}")))?;
            let n = v
                .get("domain_size")
                .and_then(Value::as_u64)
                .ok_or_else(|| usage("group JSON needs an integer domain_size"))?;
            let gens = perms(v.get("generators").unwrap_or(&Value::Null), "generators")?;
            let group = group_closure(n as usize, gens)?;
            let h1 = subgroup(&group, v.get("h1").unwrap_or(&Value::Null), "h1")?;
            let h2 = subgroup(&group, v.get("h2").unwrap_or(&Value::Null), "h2")?;
            (group, h1, h2)
        }
        (None, None) => return Err(usage("need --group or --demo gl32")),
    };
    let h2 = if a.same { h1.clone() } else { h2 };
    let report = gassmann_check(&group, &h1, &h2);
    let rep = |i: usize| group.elements()[i].images().collect::<Vec<_>>();
    let rows: Vec<Vec<String>> = report
        .table
        .iter()
        .map(|r| {
            vec![
                list(&rep(r.representative)),
                r.class_size.to_string(),
                r.in_first.to_string(),
                r.in_second.to_string(),
            ]
        })
        .collect();
    let table_json: Vec<Value> = report
        .table
        .iter()
        .map(|r| {
            object(vec![
                ("representative", nums(&rep(r.representative))),
                ("class_size", num(r.class_size)),
                ("in_h1", num(r.in_first)),
                ("in_h2", num(r.in_second)),
            ])
        })
        .collect();
    let payload = object(vec![
        ("order", num(group.order())),
        ("h1_order", num(h1.order())),
        ("h2_order", num(h2.order())),
        ("equivalent", Value::Bool(report.equivalent)),
        ("conjugate", Value::Bool(report.conjugate)),
        ("classes", Value::Array(table_json)),
    ]);
    let text = format!(
        "{}\n{}",
        fields(&[
            ("|G|", group.order().to_string()),
            ("|H1|, |H2|", format!("{}, {}", h1.order(), h2.order())),
            ("equivalent", report.equivalent.to_string()),
            ("conjugate", report.conjugate.to_string()),
        ]),
        table(&["class representative", "size", "in H1", "in H2"], &rows)
    );
    Ok((payload, text))
}

fn bc_act(a: &BcActArgs) -> Outcome {
    let sys = FiniteLevelSystem::new(a.level)?;
    let y = sys.act(a.n, a.x)?;
    let mut payload = vec![
        ("level", num(a.level)),
        ("n", num(a.n)),
        ("x", num(a.x)),
        ("result", num(y)),
        ("x_is_unit", Value::Bool(sys.is_unit(a.x % a.level))),
    ];
    let mut lines = vec![("n * x mod M", y.to_string())];
    if let Some(t) = a.t {
        let phase = time_evolution_phase(a.n, t)?;
        payload.push(("t", real_v(t)));
        payload.push(("phase", complex_v(phase)));
        lines.push(("n^{it}", complex(phase)));
    }
    Ok((object(payload), fields(&lines)))
}

fn observable(sys: &FiniteLevelSystem, a: &BcStateArgs) -> Result<Observable, CliError> {
    if let Some(text) = &a.observable {
        let v: Vec<[f64; 2]> =
            serde_json::from_str(text).map_err(|e| usage(format!("bad observable JSON: {e}")))?;
        return Ok(Observable::new(sys, v.iter().map(|[re, im]| ComplexValue::new(*re, *im)).collect())?);
    }
    if let Some(e) = &a.character {
        let group = unit_group_structure(sys.level())?;
        let chi = group.character(e.0.clone())?;
        return Ok(Observable::from_character(sys, &chi)?);
    }
    Ok(Observable::constant(sys, 1.0))
}

fn bc_state(cli: &Cli, a: &BcStateArgs) -> Outcome {
    let p = policy(cli)?;
    let sys = FiniteLevelSystem::new(a.level)?;
    let f = observable(&sys, a)?;
    let value = gibbs_state(&sys, a.beta, a.x0, &f, &p)?;
    let z = partition_function(a.beta, &p)?;
    let mut payload = vec![
        ("level", num(a.level)),
        ("beta", real_v(a.beta)),
        ("x0", num(a.x0)),
        ("value", complex_v(value)),
        ("partition_function", real_v(z)),
    ];
    let mut lines = vec![("omega(f)", complex(value)), ("zeta(beta)", real(z))];
    if let Some(terms) = a.direct {
        let (d, bound) = gibbs_state_direct(&sys, a.beta, a.x0, &f, terms)?;
        payload.push((
            "direct",
            object(vec![("terms", num(terms)), ("value", complex_v(d)), ("error_bound", real_v(bound))]),
        ));
        lines.push(("direct sum", complex(d)));
        lines.push(("direct bound", real(bound)));
    }
    Ok((object(payload), fields(&lines)))
}

fn bc_check_iso(cli: &Cli, a: &BcIsoArgs) -> Outcome {
    let bound = cli.bound.unwrap_or(50);
    let sys = FiniteLevelSystem::new(a.level)?;
    let cand = match &a.swap {
        None => IsoCandidate::unit_multiplication(a.level, a.unit, bound)?,
        Some(sw) => {
            let [p, q] = arity("swap", sw, 2)? else { unreachable!() };
            let mut map: BTreeMap<u64, u64> =
                zetakit::fp_poly::primes_up_to(bound).into_iter().map(|r| (r, r)).collect();
            map.insert(*p, *q);
            map.insert(*q, *p);
            let points = (0..a.level).map(|x| a.unit % a.level * x % a.level).collect();
            IsoCandidate::new(points, map)?
        }
    };
    let r = check_iso_candidate(&sys, &sys, &cand, bound)?;
    let witness = r
        .equivariance_witness
        .map_or(Value::Null, |(n, x)| json!({ "n": n.to_string(), "x": x.to_string() }));
    let payload = object(vec![
        ("level", num(a.level)),
        ("bound", num(bound)),
        ("equivariant", Value::Bool(r.equivariant)),
        ("norm_preserving", Value::Bool(r.norm_preserving)),
        ("equivariance_witness", witness),
        ("norm_witness", r.norm_witness.map_or(Value::Null, num)),
        ("checked", num(r.checked)),
    ]);
    let text = fields(&[
        ("equivariant", r.equivariant.to_string()),
        ("norm preserving", r.norm_preserving.to_string()),
        (
            "equivariance witness",
            r.equivariance_witness.map_or("none".into(), |(n, x)| format!("n = {n}, x = {x}")),
        ),
        ("norm witness", r.norm_witness.map_or("none".into(), |n| n.to_string())),
        ("integers checked", r.checked.to_string()),
    ]);
    Ok((payload, text))
}

fn lseries(cli: &Cli, a: &LseriesArgs) -> Outcome {
    let p = policy(cli)?;
    let group = unit_group_structure(a.modulus)?;
    let chi = match &a.chi {
        Some(e) => group.character(e.0.clone())?,
        None => group.principal(),
    };
    let v = l_series(&chi, a.s, &p)?;
    let mut payload = vec![
        ("modulus", num(a.modulus)),
        ("chi", nums(chi.exponents())),
        ("s", real_v(a.s)),
        ("value", complex_v(v)),
    ];
    let mut text = fields(&[("chi", format!("({})", list(chi.exponents()))), ("L(s, chi)", complex(v))]);
    if a.table {
        let vals: Vec<ComplexValue> = (0..a.modulus as i64).map(|n| chi.evaluate(n)).collect();
        payload.push(("values", Value::Array(vals.iter().map(|z| complex_v(*z)).collect())));
        let rows: Vec<Vec<String>> =
            vals.iter().enumerate().map(|(n, z)| vec![n.to_string(), complex(*z)]).collect();
        text = format!("{text}\n{}", table(&["n", "chi(n)"], &rows));
    }
    Ok((object(payload), text))
}

fn fingerprint(cli: &Cli, a: &FingerprintArgs) -> Outcome {
    let p = policy(cli)?;
    let s: Vec<u32> = a
        .s
        .0
        .iter()
        .map(|&x| u32::try_from(x).map_err(|_| usage(format!("s = {x} is too large"))))
        .collect::<Result<_, _>>()?;
    let group = unit_group_structure(a.modulus)?;
    let fp = l_fingerprint(a.modulus, &s, &p)?;
    let components: Vec<Value> = group
        .components()
        .iter()
        .map(|c| {
            object(vec![
                ("generator", num(c.generator)),
                ("order", num(c.order)),
                ("block_modulus", num(c.block_modulus)),
            ])
        })
        .collect();
    let mut chars = serde_json::Map::new();
    let mut rows = Vec::new();
    for (e, vals) in &fp.rows {
        let key = list(e);
        let entry: serde_json::Map<String, Value> =
            s.iter().zip(vals).map(|(s, v)| (s.to_string(), complex_v(*v))).collect();
        chars.insert(key.clone(), Value::Object(entry));
        let mut row = vec![format!("({key})")];
        row.extend(vals.iter().map(|v| complex(*v)));
        rows.push(row);
    }
    let payload = object(vec![
        ("modulus", num(a.modulus)),
        ("s_values", nums(&s)),
        ("unit_group", Value::Array(components)),
        ("characters", Value::Object(chars)),
    ]);
    let headers: Vec<String> = std::iter::once("chi".to_string())
        .chain(s.iter().map(|s| format!("L({s}, chi)")))
        .collect();
    let headers: Vec<&str> = headers.iter().map(String::as_str).collect();
    let gens: Vec<String> = group
        .components()
        .iter()
        .map(|c| format!("{} (order {})", c.generator, c.order))
        .collect();
    let text = format!("(Z/{})* generators: {}\n{}", a.modulus, gens.join(", "), table(&headers, &rows));
    Ok((payload, text))
}

fn form(a: &EpsteinArgs) -> Result<BinaryQuadraticForm, CliError> {
    let c = arity("form", &a.form, 3)?;
    Ok(BinaryQuadraticForm::new(c[0], c[1], c[2])?)
}

fn epstein(a: &EpsteinArgs) -> Outcome {
    let q = form(a)?;
    let v = epstein_accelerated(&q, a.s)?;
    let mut payload = vec![
        ("form", Value::Array(a.form.0.iter().map(|x| real_v(*x)).collect())),
        ("s", real_v(a.s)),
        ("value", real_v(v)),
    ];
    let mut lines = vec![("zeta_Q(s)", real(v))];
    if let Some(r) = a.radius {
        let d = epstein_direct(&q, a.s, r)?;
        payload.push((
            "direct",
            object(vec![
                ("radius", real_v(r)),
                ("value", real_v(d.value)),
                ("error_bound", real_v(d.error_bound)),
                ("terms", num(d.terms)),
            ]),
        ));
        lines.push(("direct sum", real(d.value)));
        lines.push(("direct bound", real(d.error_bound)));
    }
    Ok((object(payload), fields(&lines)))
}

fn eisenstein_cmd(a: &EisensteinArgs) -> Outcome {
    let t = arity("tau", &a.tau, 2)?;
    let tau = UpperHalfPoint::new(t[0], t[1])?;
    let v = eisenstein(&tau, a.s)?;
    Ok((
        object(vec![("tau", json!([real(t[0]), real(t[1])])), ("s", real_v(a.s)), ("value", real_v(v))]),
        fields(&[("E(tau, s)", real(v))]),
    ))
}

fn dilog_cmd(a: &DilogArgs) -> Outcome {
    let c = arity("z", &a.z, 2)?;
    let z = ComplexValue::new(c[0], c[1]);
    let li = dilog(z)?;
    let d = bloch_wigner(z)?;
    Ok((
        object(vec![("z", complex_v(z)), ("dilog", complex_v(li)), ("bloch_wigner", real_v(d))]),
        fields(&[("Li2(z)", complex(li)), ("D(z)", real(d))]),
    ))
}

fn lattice(name: &str, v: &List<f64>) -> Result<Lattice2D, CliError> {
    let c = arity(name, v, 4)?;
    Ok(Lattice2D::new([c[0], c[1]], [c[2], c[3]])?)
}

fn lattice_json(l: &Lattice2D) -> Value {
    json!([real(l.v1[0]), real(l.v1[1]), real(l.v2[0]), real(l.v2[1])])
}

fn torus_zeta(a: &TorusZetaArgs) -> Outcome {
    let l = lattice("lattice", &a.lattice)?;
    let v = spectral_zeta_flat_torus(&l, a.s)?;
    Ok((
        object(vec![("lattice", lattice_json(&l)), ("s", real_v(a.s)), ("value", real_v(v))]),
        fields(&[("zeta_X(s)", real(v))]),
    ))
}

fn torus_distance(cli: &Cli, a: &TorusDistanceArgs) -> Outcome {
    let l1 = lattice("l1", &a.l1)?;
    let l2 = lattice("l2", &a.l2)?;
    let grid = cli.grid.unwrap_or(DEFAULT_GRID);
    let r = torus_length_bound(&l1, &l2, a.s_lo, a.s_hi, grid)?;
    Ok((
        object(vec![
            ("l1", lattice_json(&l1)),
            ("l2", lattice_json(&l2)),
            ("s_lo", real_v(a.s_lo)),
            ("s_hi", real_v(a.s_hi)),
            ("grid", num(grid)),
            ("value", real_v(r.value)),
            ("argmax", real_v(r.argmax)),
        ]),
        fields(&[("sup |log ratio|", real(r.value)), ("at s", real(r.argmax))]),
    ))
}

fn paper_check() -> Outcome {
    let c = paper_constant_check()?;
    let payload = object(vec![
        ("dilog_ratio", real_v(c.dilog_ratio)),
        ("bloch_wigner_i", real_v(c.bloch_wigner_i)),
        ("bloch_wigner_rho", real_v(c.bloch_wigner_rho)),
        ("epstein_ratio_s2", real_v(c.epstein_ratio_s2)),
        ("epstein_square_s2", real_v(c.epstein_square_s2)),
        ("epstein_hex_minus_s2", real_v(c.epstein_hex_minus_s2)),
        ("epstein_hex_plus_s2", real_v(c.epstein_hex_plus_s2)),
        ("equivalent_forms_gap", real_v(c.equivalent_forms_gap())),
        ("eisenstein_ratio_s2", real_v(c.eisenstein_ratio_s2)),
        ("eisenstein_i_s2", real_v(c.eisenstein_i_s2)),
        ("eisenstein_rho_s2", real_v(c.eisenstein_rho_s2)),
    ]);
    let text = fields(&[
        ("(3*sqrt3/4) D(i)/D(rho)", real(c.dilog_ratio)),
        ("D(i)", real(c.bloch_wigner_i)),
        ("D(rho)", real(c.bloch_wigner_rho)),
        ("zeta_{m2+n2}(2) / zeta_{m2-mn+n2}(2)", real(c.epstein_ratio_s2)),
        ("zeta_{m2-mn+n2}(2) - zeta_{m2+mn+n2}(2)", real(c.epstein_hex_minus_s2 - c.epstein_hex_plus_s2)),
        ("E(i,2) / E(rho,2)", real(c.eisenstein_ratio_s2)),
    ]);
    Ok((payload, text))
}
