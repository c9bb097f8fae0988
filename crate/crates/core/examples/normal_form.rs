use artin_markings::{ArtinGroup, GeneratorWord};

fn main() {
    let a2 = ArtinGroup::from_type_str("A2").unwrap();
    for w in ["s1 s2 s1", "s2 s1 s2", "s1 s2^-1 s1", "(s1 s2)^3"] {
        let x = a2.normalize(&GeneratorWord::parse(w, 2).unwrap());
        println!("{w:>14}  ->  {}", a2.format_element(&x));
    }

    let b3 = ArtinGroup::from_type_str("B3").unwrap();
    let x = b3.parse_element("s1 s2 s3 s1^-1 s2").unwrap();
    let y = b3.parse_element("s3 s2^-1").unwrap();
    let xy = b3.mul(&x, &y);
    println!("B3: x·y = {}", b3.format_element(&xy));
    println!("    inf {} sup {} canonical length {}", xy.inf(), xy.sup(), xy.canonical_length());
    println!("    x·y·(x·y)^-1 trivial: {}", b3.mul(&xy, &b3.inv(&xy)).is_identity());

    // left fraction and parabolic support
    let (a, b) = b3.left_fraction(&xy);
    println!("    = ({})^-1 · {}", b3.format_element(&a), b3.format_element(&b));
    println!("    smallest standard parabolic containing it: {{{}}}", b3.parabolic_support(&xy).key());
}
