use mbzeta::zerocensus::{riemann_von_mangoldt, rotated, scan_zeros, Catalog, LFunction};
use mbzeta::Error;

const BETA_TABLE: [f64; 4] = [6.020_948_904_7, 10.243_770_304, 12.988_098_012, 16.342_607_105];

fn zeta_catalog(t: f64) -> Catalog {
    Catalog::scanned(LFunction::Zeta, scan_zeros(LFunction::Zeta, t).unwrap(), t)
}

#[test]
fn beta_ordinates_match_table() {
    let zeros = scan_zeros(LFunction::Beta, 17.0).unwrap();
    assert_eq!(zeros.len(), 4);
    for (z, want) in zeros.iter().zip(BETA_TABLE) {
        assert!((z.ordinate - want).abs() < 1e-9, "{} vs {want}", z.ordinate);
    }
}

#[test]
fn consecutive_zeros_bracket_one_sign_change() {
    for function in [LFunction::Zeta, LFunction::Beta] {
        let ts: Vec<f64> = scan_zeros(function, 120.0).unwrap().iter().map(|r| r.ordinate).collect();
        for w in ts.windows(2) {
            let n = 400;
            let mut changes = 0;
            let mut prev = rotated(function, w[0] + 1e-5).re;
            for k in 1..=n {
                let t = w[0] + 1e-5 + (w[1] - w[0] - 2e-5) * k as f64 / n as f64;
                let v = rotated(function, t).re;
                if v.signum() != prev.signum() {
                    changes += 1;
                }
                prev = v;
            }
            assert_eq!(changes, 0, "{function}: extra sign change between {} and {}", w[0], w[1]);
            let a = rotated(function, w[0] - 1e-5).re;
            let b = rotated(function, w[0] + 1e-5).re;
            assert!(a.signum() != b.signum());
        }
    }
}

#[test]
fn each_zero_adds_one_to_the_count() {
    let cat = zeta_catalog(200.0);
    for t in cat.ordinates() {
        let hi = riemann_von_mangoldt(t + 1e-4, &cat).unwrap();
        let lo = riemann_von_mangoldt(t - 1e-4, &cat).unwrap();
        assert_eq!(hi.jump_count - lo.jump_count, 1);
        assert!(hi.consistent() && lo.consistent(), "t = {t}");
    }
}

#[test]
fn zeros_are_simple() {
    for function in [LFunction::Zeta, LFunction::Beta] {
        for r in scan_zeros(function, 200.0).unwrap() {
            let h = 1e-6;
            let d = (rotated(function, r.ordinate + h).re - rotated(function, r.ordinate - h).re) / (2.0 * h);
            assert!(d.abs() > 1e-6, "{function} at {}", r.ordinate);
        }
    }
}

#[test]
fn catalog_file_round_trip_and_integrity() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("zeta.cat");
    let cat = zeta_catalog(60.0);
    cat.store(&path).unwrap();
    let back = Catalog::load(&path).unwrap();
    assert_eq!(back.records, cat.records);
    let first = std::fs::read(&path).unwrap();
    cat.store(&path).unwrap();
    assert_eq!(std::fs::read(&path).unwrap(), first);

    let text = String::from_utf8(first).unwrap();
    let cut = &text[..text.len() - 40];
    std::fs::write(&path, cut).unwrap();
    assert!(matches!(Catalog::load(&path), Err(Error::ChecksumMismatch) | Err(Error::CatalogFormat(_))));
}

#[test]
fn count_requires_coverage() {
    let cat = zeta_catalog(50.0);
    assert!(matches!(riemann_von_mangoldt(80.0, &cat), Err(Error::IncompleteCatalog { .. })));
}
