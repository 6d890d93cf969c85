use std::path::PathBuf;

use verlinde_core::gusrep::ade_quiver;
use verlinde_core::{Error, Family};
use verlinde_kit::{Config, KitError, QuiverFile};

fn fixture(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("fixtures").join(name)
}

#[test]
fn fixtures_match_builtin_diagrams() {
    for (name, f, n) in [
        ("a2.json", Family::A, 2),
        ("a3.json", Family::A, 3),
        ("d4.json", Family::D, 4),
        ("e6.json", Family::E, 6),
    ] {
        let q = QuiverFile::load(&fixture(name)).unwrap().to_quiver().unwrap();
        let b = ade_quiver(f, n).unwrap();
        assert_eq!((q.family, q.rank, q.level), (b.family, b.rank, b.level), "{name}");
        assert_eq!(q.adjacency(0), b.adjacency(0), "{name}");
        assert_eq!(q.vertices, b.vertices, "{name}");
    }
}

#[test]
fn round_trip() {
    let q = ade_quiver(Family::E, 7).unwrap();
    let file = QuiverFile::from_quiver(&q);
    let text = serde_json::to_string(&file).unwrap();
    let back: QuiverFile = serde_json::from_str(&text).unwrap();
    assert_eq!(back.to_quiver().unwrap(), q);
    assert_eq!(file.edges[0].grade_fundamental, 1);
}

#[test]
fn schema_errors() {
    let mut f = QuiverFile::load(&fixture("a3.json")).unwrap();
    f.edges[0].grade_fundamental = 0;
    assert!(matches!(f.to_quiver(), Err(KitError::Core(Error::Schema(_)))));
    let mut f = QuiverFile::load(&fixture("a3.json")).unwrap();
    f.edges[0].to = "nowhere".into();
    assert!(matches!(f.to_quiver(), Err(KitError::Core(Error::Schema(_)))));
    let mut f = QuiverFile::load(&fixture("a3.json")).unwrap();
    f.vertices[1].grade = None;
    assert!(matches!(f.to_quiver(), Err(KitError::Core(Error::Schema(_)))));
    let mut f = QuiverFile::load(&fixture("a3.json")).unwrap();
    f.algebra.family = "Q".into();
    assert_eq!(f.to_quiver().unwrap_err().exit_code(), 4);
}

#[test]
fn config_defaults_and_validation() {
    let c = Config::default();
    assert_eq!(c.tolerance, 1e-6);
    assert!(c.limits().is_ok());
    let c = Config { tolerance: 0.1, ..Config::default() };
    assert_eq!(c.limits().unwrap_err().exit_code(), 4);
    let c: Config = toml::from_str("parallel = 3\nformat = \"csv\"").unwrap();
    assert_eq!(c.parallel, 3);
}
