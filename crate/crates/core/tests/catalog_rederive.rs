//! The bundled catalog is reproducible from its recipes.

use minorkit::catalog::{Catalog, Provenance, Recipe};
use minorkit::minor::DEFAULT_BUDGET;
use minorkit::{are_isomorphic, Graph};

#[test]
fn every_entry_rederives_and_meets_its_claims() {
    let checks = Catalog::builtin().self_test(DEFAULT_BUDGET, true).unwrap();
    let bad: Vec<_> = checks.iter().filter(|c| !c.ok).collect();
    assert!(bad.is_empty(), "{bad:#?}");
    assert!(checks.iter().all(|c| c.rederived));
}

#[test]
fn disputed_claims_are_recorded() {
    let checks = Catalog::builtin().self_test(DEFAULT_BUDGET, false).unwrap();
    let disputed: Vec<(&str, &[String])> =
        checks.iter().filter(|c| !c.disputed.is_empty()).map(|c| (c.name.as_str(), &c.disputed[..])).collect();
    assert_eq!(disputed, [("K43^{2',1}", &["i4c".to_string()][..])]);
}

#[test]
fn labeled_entries_keep_default_labels() {
    for e in Catalog::builtin().entries().iter().filter(|e| e.spec.labeled) {
        let labels: Vec<u16> = (1..=e.graph.order() as u16).collect();
        assert_eq!(e.graph.labels(), &labels[..], "{}", e.spec.name);
    }
}

#[test]
fn provenance_matches_recipe_kind() {
    for e in Catalog::builtin().entries() {
        let search = matches!(
            e.spec.recipe,
            Recipe::KmThree { .. } | Recipe::Exhaustive { .. } | Recipe::Superset { .. } | Recipe::PlanarSurvey { .. }
        );
        assert_eq!(search, e.spec.provenance == Provenance::EnumerationDerived, "{}", e.spec.name);
    }
}

#[test]
fn round_trips_through_a_directory() {
    let dir = std::env::temp_dir().join(format!("minorkit-catalog-{}", std::process::id()));
    Catalog::builtin().write(&dir).unwrap();
    let back = Catalog::load(&dir).unwrap();
    std::fs::remove_dir_all(&dir).ok();
    let a: Vec<Graph> = Catalog::builtin().entries().iter().map(|e| e.graph).collect();
    let b: Vec<Graph> = back.entries().iter().map(|e| e.graph).collect();
    assert_eq!(a, b);
}

#[test]
fn small_identities() {
    let c = Catalog::builtin();
    let iso = |a: &str, b: &str| are_isomorphic(&c.resolve(a).unwrap(), &c.resolve(b).unwrap());
    assert!(iso("DW+3", "K5"));
    assert!(iso("Ktri33", "H2"));
    assert!(iso("catalog:M", "V8^1"));
    assert!(iso("family:k3,3+12,13/12,13", "DW+4"));
    assert!(!iso("K43^{3,0}", "K43^{3',0}"));
}
