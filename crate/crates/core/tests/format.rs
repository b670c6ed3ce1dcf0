use homhopf::catalog::lookup;
use homhopf::exactlin::frac;
use homhopf::format::{digest, parse, serialize, AlgebraFile, Block};
use homhopf::HomError;

const CATALOG: [&str; 9] =
    ["trivial", "ax1", "kz2", "sweedler_hom", "sweedler_hom:3/2", "cyclic:4", "zn_aut:5:2", "s3", "cyclic:6"];

#[test]
fn catalog_entries_round_trip() {
    for name in CATALOG {
        let f = AlgebraFile::from_entry(&lookup(name).unwrap());
        let text = serialize(&f);
        let back = parse(&text).unwrap();
        assert_eq!(back, f, "{name}");
        assert_eq!(serialize(&back), text, "{name}");
    }
}

#[test]
fn entries_carry_their_extra_blocks() {
    let ax1 = parse(&serialize(&AlgebraFile::from_entry(&lookup("ax1").unwrap()))).unwrap();
    assert!(ax1.bicross().unwrap().is_some());
    let sw = parse(&serialize(&AlgebraFile::from_entry(&lookup("sweedler_hom").unwrap()))).unwrap();
    assert!(sw.r_matrix().unwrap().is_some());
    assert_eq!(sw.to_entry().unwrap().hopf, lookup("sweedler_hom").unwrap().hopf);
}

#[test]
fn digests_are_frozen() {
    let d = |n: &str| digest(&serialize(&AlgebraFile::from_entry(&lookup(n).unwrap())));
    assert_eq!(d("ax1"), "2883ebcc1715adb007ea9586261bc65e51221f39c0a10186a74595bbcf0780ca");
    assert_eq!(d("kz2"), "3fac9aa737f74d94fe1be96b8105519d8cea91410e3cb2d679e9fbb2d5f2beb6");
    assert_eq!(d("cyclic:3"), "422c5a2f5b8c777551325e65e049b3032af9d17ed0edb09d19b227a6c5996938");
}

const KZ2_SHUFFLED: &str = "homhopf 1
# comments and blank lines are ignored

dim 2
name kz2
field_char 0
basis 1 g
block unit 2
0 1
block mul 2 2 2
1 1 0 1
1 0 1 1
0 1 1 1
0 0 0 1
0 0 1 0
block counit 2
1 1
0 1
block comul 2 2 2
1 1 1 2/2
0 0 0 1
block alpha 2 2
1 1 1
0 0 1
block antipode 2 2
0 0 1
1 1 1
";

#[test]
fn serialization_is_canonical() {
    let f = parse(KZ2_SHUFFLED).unwrap();
    assert_eq!(serialize(&f), serialize(&AlgebraFile::from_entry(&lookup("kz2").unwrap())));
}

fn expect_err(text: &str) -> HomError {
    parse(text).expect_err("should be rejected")
}

#[test]
fn out_of_range_index_is_a_range_error() {
    let e = expect_err("homhopf 1\ndim 4\nfield_char 0\nblock mul 4 4 4\n0 5 0 1\n");
    assert!(matches!(e, HomError::Range { line: 5, .. }), "{e}");
}

#[test]
fn zero_denominator_is_a_parse_error() {
    let e = expect_err("homhopf 1\ndim 1\nfield_char 0\nblock unit 1\n0 1/0\n");
    match e {
        HomError::Parse { line, col, message } => {
            assert_eq!((line, col), (5, 3));
            assert!(message.contains("zero denominator"));
        }
        other => panic!("{other}"),
    }
}

#[test]
fn duplicate_indices_are_not_summed() {
    let e = expect_err("homhopf 1\ndim 2\nfield_char 0\nblock unit 2\n0 1\n0 0\n");
    assert!(matches!(e, HomError::DuplicateEntry { line: 6, .. }), "{e}");
    let e = expect_err("homhopf 1\ndim 2\nfield_char 0\nblock unit 2\n0 1\nblock unit 2\n");
    assert!(matches!(e, HomError::DuplicateEntry { .. }), "{e}");
}

#[test]
fn structural_errors_carry_positions() {
    for (text, line) in [
        ("homhopf 2\ndim 1\n", 1),
        ("hello 1\n", 1),
        ("homhopf 1\ndim 2\nfield_char 3\n", 3),
        ("homhopf 1\ndim 2\nfield_char 0\nblock frob 2\n", 4),
        ("homhopf 1\ndim 2\nfield_char 0\nblock mul 2 2\n", 4),
        ("homhopf 1\ndim 2\nfield_char 0\nblock mul 3 3 3\n", 4),
        ("homhopf 1\ndim 2\nfield_char 0\nblock unit 2\n0 x\n", 5),
        ("homhopf 1\ndim 2\nfield_char 0\nblock unit 2\n0 1 1\n", 5),
        ("homhopf 1\ndim 2\nfield_char 0\n0 1\n", 4),
    ] {
        match parse(text) {
            Err(HomError::Parse { line: l, .. }) => assert_eq!(l, line, "{text:?}"),
            other => panic!("{text:?}: {other:?}"),
        }
    }
}

#[test]
fn missing_blocks_are_reported_when_interpreted() {
    let f = parse("homhopf 1\ndim 1\nfield_char 0\nblock unit 1\n0 1\n").unwrap();
    assert!(f.structure().is_err());
}

#[test]
fn labels_are_single_tokens() {
    let h = lookup("kz2").unwrap().hopf;
    let f = AlgebraFile::from_hopf("odd", Some(vec!["a b".into(), "c#d".into()]), &h);
    let back = parse(&serialize(&f)).unwrap();
    assert_eq!(back.basis, vec!["a_b", "c_d"]);
}

#[test]
fn blocks_convert_losslessly() {
    let v = vec![frac(1, 2), frac(0, 1), frac(-3, 4)];
    assert_eq!(Block::from_vector(&v).to_vector(), v);
    let h = lookup("sweedler_hom:2").unwrap().hopf;
    assert_eq!(&Block::from_tensor(h.comul()).to_tensor(), h.comul());
    assert_eq!(&Block::from_matrix(h.alpha()).to_matrix(), h.alpha());
}
