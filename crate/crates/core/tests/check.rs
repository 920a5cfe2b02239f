use std::io::Write;

use totring::check::*;
use totring::ring::{make_ring, RingSpec};

fn find<'a>(s: &'a Selfcheck, name: &str) -> &'a RingCheck {
    s.rings.iter().find(|c| c.name == name).unwrap_or_else(|| panic!("{name} missing"))
}

fn status(c: &RingCheck, law: &str) -> Status {
    c.laws.iter().find(|l| l.law == law).unwrap_or_else(|| panic!("{law} missing")).status
}

#[test]
fn corpus_has_no_failures() {
    let (s, _) = selfcheck(&builtin_corpus(), &CheckOptions::default()).unwrap();
    for c in &s.rings {
        for l in &c.laws {
            assert_ne!(l.status, Status::Fail, "{} {}: {}", c.name, l.law, l.detail);
        }
    }
    assert_eq!(s.tally.fail, 0);
    assert!(s.tally.pass > 100);

    assert_eq!(status(find(&s, "Z(9)"), "gamma_local_formula"), Status::Warn);
    assert_eq!(status(find(&s, "Z(9)"), "gamma_profile"), Status::Pass);
    assert_eq!(status(find(&s, "M(2,GF(3))"), "conjecture"), Status::Warn);
    assert_eq!(status(find(&s, "M(2,GF(2))"), "conjecture"), Status::Pass);
    assert_eq!(status(find(&s, "Z(6)"), "conjecture"), Status::Skip);
    assert_eq!(status(find(&s, "M(3,GF(2))"), "gamma_bound"), Status::Skip);
    assert_eq!(status(find(&s, "GF(2) x GF(2)"), "eulerian"), Status::Pass);
    assert_eq!(find(&s, "M(2,GF(2))").values.gamma, Some(3));
    assert_eq!(find(&s, "@dual-numbers").values.radical, 2);
    assert!(s.pairs.iter().any(|p| p.status == Status::Warn));
}

#[test]
fn parallel_is_identical() {
    let corpus: Vec<_> = builtin_corpus().into_iter().filter(|e| !e.heavy).take(12).collect();
    let seq = selfcheck(&corpus, &CheckOptions::default()).unwrap().0;
    let par = selfcheck(&corpus, &CheckOptions { parallel: true, ..Default::default() }).unwrap().0;
    assert_eq!(serde_json::to_string(&seq).unwrap(), serde_json::to_string(&par).unwrap());
}

#[test]
fn dual_numbers_are_local() {
    let r = make_ring(&RingSpec::table(dual_numbers_table())).unwrap();
    assert!(r.is_local() && r.is_commutative());
    let c = check_ring(&r, "dual", false, &CheckOptions::default());
    assert_eq!(c.worst(), Status::Skip, "{:?}", c.laws);
}

#[test]
fn corpus_files() {
    let mut f = tempfile_path("corpus.txt");
    writeln!(f.1, "# comment\nZ(4)\n\nGF(2) x Z(3)  # trailing").unwrap();
    let c = load_corpus(&f.0).unwrap();
    assert_eq!(c.iter().map(|e| e.name.as_str()).collect::<Vec<_>>(), ["Z(4)", "GF(2) x Z(3)"]);

    f = tempfile_path("empty.txt");
    writeln!(f.1, "# nothing").unwrap();
    assert!(matches!(load_corpus(&f.0), Err(CorpusError::Empty)));

    f = tempfile_path("bad.txt");
    writeln!(f.1, "Z(4)\nM(2,").unwrap();
    assert!(matches!(load_corpus(&f.0), Err(CorpusError::Parse { line: 2, .. })));
}

fn tempfile_path(name: &str) -> (std::path::PathBuf, std::fs::File) {
    let dir = std::env::temp_dir().join(format!("totring-check-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join(name);
    let file = std::fs::File::create(&path).unwrap();
    (path, file)
}
