use artin_markings::{ArtinGroup, GenSet};

fn main() {
    let a4 = ArtinGroup::from_type_str("A4").unwrap();
    let xs: Vec<GenSet> = ["s1", "s1,s2", "s4"].iter().map(|s| GenSet::parse(s, 4).unwrap()).collect();
    let m = a4.standard_transversals(&xs).unwrap();
    for (p, q) in &m.pairs {
        println!("({{{}}}, {{{}}})", p.gens.key(), q.gens.key());
    }
    let cert = a4.validate_marking(&m).unwrap();
    println!("valid; levels {:?}", cert.levels.level_of);

    let x = a4.parse_element("s2 s3^-1 s4 s1").unwrap();
    let moved = a4.conj_marking(&m, &x);
    a4.validate_marking(&moved).unwrap();
    let twisted = a4.twist_move(&moved, 2, false).unwrap();
    println!("projections after conjugating {:?}", a4.projections(&moved).unwrap());
    println!("after a twist at index 2   {:?}", a4.projections(&twisted).unwrap());
    println!("{}", serde_json::to_string(&a4.marking_to_json(&moved)).unwrap());

    let (c, s) = a4.standardize_marking(&twisted).unwrap();
    println!("standardized by {}: all standard {}", a4.format_element(&c), a4.is_all_standard(&s));
}
