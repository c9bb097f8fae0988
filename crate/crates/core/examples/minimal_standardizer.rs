use artin_markings::{ArtinGroup, GenSet, ParabolicSubgroup};

fn main() {
    let a3 = ArtinGroup::from_type_str("A3").unwrap();
    let conj = a3.parse_element("s2 s3^-1 s1").unwrap();
    let p = ParabolicSubgroup::new(conj, GenSet::parse("s1,s2", 3).unwrap());
    let (c, y) = a3.minimal_standardizer(&p).unwrap();
    println!("P = ({}) A_{{s1,s2}} (...)^-1", a3.format_element(&p.conj));
    println!("minimal standardizer {}  ->  A_{{{}}}", a3.format_element(&c), y.key());
    println!("key {}", a3.parabolic_key(&p).unwrap());

    let z = a3.z_of(&p).unwrap();
    println!("z_P = {}", a3.format_element(&z));
    let q = ParabolicSubgroup::new(a3.mul(&p.conj, &a3.parse_element("s1 s2 s1^-1").unwrap()), p.gens);
    println!("same subgroup from another representative: {}", a3.parabolic_eq(&p, &q));
}
