use d2bound::bounds::{anchored_bound, fom_threshold, si_bound, BoundAnchor, ModelId};
use d2bound::catalog::{
    embedded_table1, parse_records, rank, serialize_records, Catalog, Category, ExperimentRecord, Location, Mode,
    RankFilter,
};
use d2bound::chem::{
    molar_mass, nuclei_count, parse_formula, ChemError, Formula, MaterialSpec, PeriodicTable, ELEMENTS,
};
use d2bound::fom::{
    accel_asd_from_force, evaluate_catalog, fom_from_psd, fom_from_variance, force_asd_from_accel, thermal_fom,
    thermal_force_psd,
};
use d2bound::quantity::{asd_to_psd, psd_to_asd, Constants, AVOGADRO};
use d2bound::report::{emit_figure, figure_points, round_sig3, sig3};
use proptest::prelude::*;

fn rel(a: f64, b: f64) -> f64 {
    ((a - b) / b).abs()
}

/// Log-uniform positive value in `[10^lo, 10^hi)`.
fn log_uniform(lo: f64, hi: f64) -> impl Strategy<Value = f64> {
    (lo..hi, 1.0f64..10.0).prop_map(|(e, m)| m * 10f64.powf(e.floor()))
}

fn term() -> impl Strategy<Value = (usize, u32)> {
    (0..ELEMENTS.len(), prop_oneof![Just(1u32), 2u32..1000])
}

fn formula_text() -> impl Strategy<Value = String> {
    (prop::collection::vec(term(), 1..6), any::<bool>()).prop_map(|(terms, charged)| {
        let mut s = String::new();
        for (i, count) in terms {
            s.push_str(ELEMENTS[i].symbol);
            if count != 1 {
                s.push_str(&count.to_string());
            }
        }
        if charged {
            s.push('+');
        }
        s
    })
}

proptest! {
    #[test]
    fn formula_display_round_trips(text in formula_text()) {
        let f = parse_formula(&text).unwrap();
        let canonical = f.to_string();
        let again = parse_formula(&canonical).unwrap();
        prop_assert_eq!(&again, &f);
        prop_assert_eq!(again.to_string(), canonical);
    }

    #[test]
    fn uncharged_canonical_text_is_the_input(terms in prop::collection::vec(term(), 1..6)) {
        let text: String = terms
            .iter()
            .map(|&(i, c)| if c == 1 { ELEMENTS[i].symbol.to_string() } else { format!("{}{c}", ELEMENTS[i].symbol) })
            .collect();
        prop_assert_eq!(parse_formula(&text).unwrap().to_string(), text);
    }

    #[test]
    fn zero_and_leading_zero_counts_are_rejected(i in 0..ELEMENTS.len(), tail in 0u32..100) {
        let sym = ELEMENTS[i].symbol;
        let zero = format!("{sym}0");
        let leading = format!("{sym}0{tail}");
        prop_assert!(matches!(parse_formula(&zero), Err(ChemError::Parse { .. })), "{}", zero);
        prop_assert!(matches!(parse_formula(&leading), Err(ChemError::Parse { .. })), "{}", leading);
    }

    #[test]
    fn lowercase_start_is_rejected(text in formula_text()) {
        let lowered = text.to_ascii_lowercase();
        prop_assert!(
            matches!(parse_formula(&lowered), Err(ChemError::Parse { position: 0, .. })),
            "{}", lowered
        );
    }

    #[test]
    fn embedded_whitespace_is_rejected(text in formula_text(), at in any::<prop::sample::Index>()) {
        let pos = at.index(text.len() + 1);
        let mut spaced = text.clone();
        spaced.insert(pos, ' ');
        prop_assert!(parse_formula(&spaced).is_err(), "{}", spaced);
    }

    #[test]
    fn molar_mass_scales_with_counts(text in formula_text(), k in 1u32..20) {
        let pt = PeriodicTable::standard();
        let f = parse_formula(&text).unwrap();
        let m = molar_mass(&f, pt).unwrap();
        let mk = molar_mass(&f.scaled(k), pt).unwrap();
        prop_assert!(rel(mk, f64::from(k) * m) < 1e-12);
    }

    #[test]
    fn nuclei_count_is_linear_in_mass(text in formula_text(), m in log_uniform(-27.0, 3.0), k in 1.0f64..1e3) {
        let pt = PeriodicTable::standard();
        let mat = MaterialSpec::pure(parse_formula(&text).unwrap());
        let n1 = nuclei_count(m, &mat, pt).unwrap();
        let nk = nuclei_count(m * k, &mat, pt).unwrap();
        prop_assert!(rel(nk, k * n1) < 1e-12);
    }

    #[test]
    fn single_element_count_is_mass_over_weight(i in 0..ELEMENTS.len(), m in log_uniform(-27.0, 3.0)) {
        let pt = PeriodicTable::standard();
        let el = &ELEMENTS[i];
        let mat = MaterialSpec::pure(el.symbol.parse::<Formula>().unwrap());
        let expected = m / (el.weight * 1e-3) * AVOGADRO;
        prop_assert!(rel(nuclei_count(m, &mat, pt).unwrap(), expected) < 1e-12);
    }

    #[test]
    fn psd_asd_round_trip(x in log_uniform(-30.0, 30.0)) {
        prop_assert!(rel(psd_to_asd(asd_to_psd(x).unwrap()).unwrap(), x) < 1e-12);
        prop_assert!(rel(asd_to_psd(psd_to_asd(x).unwrap()).unwrap(), x) < 1e-12);
    }

    #[test]
    fn force_accel_round_trip(sf in log_uniform(-30.0, -5.0), m in log_uniform(-27.0, 3.0)) {
        let sa = accel_asd_from_force(sf, m).unwrap();
        prop_assert!(rel(force_asd_from_accel(sa, m).unwrap(), sf) < 1e-12);
    }

    #[test]
    fn variance_route_equals_psd_route(
        sigma in log_uniform(-15.0, 0.0),
        n in log_uniform(0.0, 30.0),
        dt in log_uniform(-3.0, 5.0),
    ) {
        let direct = sigma * sigma * dt * n;
        prop_assert!(rel(fom_from_variance(sigma, n, dt).unwrap(), direct) < 1e-12);
        prop_assert!(rel(fom_from_psd(sigma * sigma * dt, n).unwrap(), direct) < 1e-12);
    }

    #[test]
    fn anchored_and_si_bounds_share_ratios(f1 in log_uniform(-15.0, 15.0), f2 in log_uniform(-15.0, 15.0)) {
        let c = Constants::default();
        for model in ModelId::ALL {
            let a = BoundAnchor::default_for(model);
            let anchored = anchored_bound(model, f1, &a).unwrap() / anchored_bound(model, f2, &a).unwrap();
            let si = si_bound(model, f1, &c).unwrap() / si_bound(model, f2, &c).unwrap();
            prop_assert!(rel(anchored, si) < 1e-12);
            prop_assert!(rel(anchored, f1 / f2) < 1e-12);
        }
    }

    #[test]
    fn threshold_inverts_anchored_bound(f in log_uniform(-15.0, 15.0), g in log_uniform(-15.0, 15.0)) {
        for model in ModelId::ALL {
            let a = BoundAnchor::default_for(model);
            let b = anchored_bound(model, f, &a).unwrap();
            prop_assert!(rel(fom_threshold(model, b, &a).unwrap(), f) < 1e-12);
            if f < g {
                prop_assert!(b < anchored_bound(model, g, &a).unwrap());
            }
        }
    }

    #[test]
    fn sig3_is_idempotent(x in log_uniform(-300.0, 300.0)) {
        let once = round_sig3(x);
        prop_assert_eq!(round_sig3(once), once);
        let text = sig3(x);
        prop_assert_eq!(sig3(text.parse::<f64>().unwrap()), text);
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(10_000))]

    #[test]
    fn thermal_fom_two_paths_agree(
        n in log_uniform(0.0, 30.0),
        temp in log_uniform(-3.0, 3.0),
        omega in log_uniform(-1.0, 9.0),
        m in log_uniform(-27.0, 3.0),
        q in log_uniform(0.0, 10.0),
    ) {
        let k_b = Constants::default().k_b;
        let s_f = thermal_force_psd(temp, m, omega, q, k_b).unwrap();
        let via_psd = fom_from_psd(s_f / (m * m), n).unwrap();
        let closed = thermal_fom(n, temp, omega, m, q, k_b).unwrap();
        prop_assert!(rel(closed, via_psd) < 1e-12, "{} vs {}", closed, via_psd);
    }
}

fn material() -> impl Strategy<Value = MaterialSpec> {
    prop::sample::select(vec!["Si3N4", "SiO2", "Yb+", "Nd2Fe14B", "0.8*SiO2+0.2*B2O3", "C", "GaAs"])
        .prop_map(|s| MaterialSpec::parse(s).unwrap())
}

fn opt(s: impl Strategy<Value = f64>) -> impl Strategy<Value = Option<f64>> {
    prop::option::of(s)
}

fn record() -> impl Strategy<Value = ExperimentRecord> {
    let identity = (
        "[A-Za-z][A-Za-z0-9 ,'\"éä-]{0,16}[A-Za-z0-9]",
        1700i32..2100,
        "[ -~]{0,24}",
        prop::sample::select(Category::ALL.to_vec()),
        material(),
    );
    let numbers = (
        log_uniform(-27.0, 3.0),
        opt(log_uniform(0.0, 30.0)),
        opt(log_uniform(-3.0, 9.0)),
        opt(log_uniform(-30.0, -5.0)),
        opt(log_uniform(-16.0, 7.0)),
        opt(log_uniform(-3.0, 3.0)),
        opt(log_uniform(0.0, 10.0)),
    );
    let flags = (
        prop_oneof![Just(Mode::Absolute), Just(Mode::Differential)],
        prop_oneof![Just(Location::Earth), Just(Location::Space)],
        any::<bool>(),
        "[ -~]{0,24}",
    );
    (identity, numbers, flags).prop_map(
        |(
            (name, year, reference, category, material),
            (mass, n_override, f0, sqrt_sf, sqrt_sa, temp, quality),
            (mode, location, secondhand, notes),
        )| {
            ExperimentRecord {
                name,
                year,
                reference,
                category,
                material,
                mass,
                n_override,
                f0,
                sqrt_sa: if sqrt_sf.is_none() && sqrt_sa.is_none() { Some(1e-9) } else { sqrt_sa },
                sqrt_sf,
                temp,
                quality,
                mode,
                location,
                secondhand,
                notes,
            }
        },
    )
}

proptest! {
    #[test]
    fn csv_round_trip_is_byte_exact(recs in prop::collection::vec(record(), 0..12)) {
        let recs: Vec<ExperimentRecord> = recs
            .into_iter()
            .enumerate()
            .map(|(i, mut r)| {
                r.name = format!("{i} {}", r.name);
                r
            })
            .collect();
        let cat = Catalog::new(recs).unwrap();
        let text = serialize_records(&cat);
        let parsed = parse_records(&text).unwrap();
        prop_assert_eq!(&parsed, &cat);
        prop_assert_eq!(serialize_records(&parsed), text);
    }

    #[test]
    fn rank_is_a_sorted_permutation(picks in prop::sample::subsequence((0..46).collect::<Vec<_>>(), 0..=46)) {
        let all = embedded_table1();
        let cat = Catalog::new(picks.iter().map(|&i| all.records()[i].clone()).collect()).unwrap();
        let results = evaluate_catalog(&cat, PeriodicTable::standard(), &Constants::default()).unwrap();
        let ranked = rank(&cat, &results, RankFilter::All);
        let mut names: Vec<&str> = ranked.iter().map(|(r, _)| r.name.as_str()).collect();
        prop_assert!(ranked.windows(2).all(|w| w[0].1.fom <= w[1].1.fom));
        names.sort_unstable();
        let mut expected: Vec<&str> = cat.records().iter().map(|r| r.name.as_str()).collect();
        expected.sort_unstable();
        prop_assert_eq!(names, expected);
    }

    #[test]
    fn figure_data_and_svg_agree_on_markers(k in 1usize..6) {
        let cat = embedded_table1();
        let results = evaluate_catalog(&cat, PeriodicTable::standard(), &Constants::default()).unwrap();
        let fig = emit_figure(&figure_points(&cat, &results, k), &BoundAnchor::defaults()).unwrap();
        for marker in ["circle", "circle-open", "diamond"] {
            let in_data = fig.data.lines().filter(|l| l.ends_with(&format!(" {marker}"))).count();
            let in_svg = fig.svg.matches(&format!("class=\"marker {marker}\"")).count();
            prop_assert_eq!(in_data, in_svg, "{}", marker);
        }
    }
}

#[test]
fn embedded_catalog_round_trips() {
    let cat = embedded_table1();
    let text = serialize_records(&cat);
    assert_eq!(parse_records(&text).unwrap(), cat);
    assert_eq!(serialize_records(&parse_records(&text).unwrap()), text);
}
