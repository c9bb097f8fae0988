use artin_markings::{ArtinGroup, GenSet};

fn main() {
    let a3 = ArtinGroup::from_type_str("A3").unwrap();
    let x = GenSet::parse("s1,s2", 3).unwrap();
    let mut cur = x;
    for t in [2, 0] {
        let r = a3.elementary_ribbon(cur, t);
        println!("d({{{}}}, s{}) = {}  ->  {{{}}}", cur.key(), t + 1, a3.format_element(&r.element), r.target.key());
        cur = r.target;
    }
    let f = a3.ribbon_delta_form(x, &[2, 0]).unwrap();
    println!("as deltas: exponents {:?}, Δ power {}", f.exponents, f.gamma);
    println!("matches: {}", a3.ribbon_form_element(&f) == a3.compose_ribbons(x, &[2, 0]).0);

    let b3 = ArtinGroup::from_type_str("B3").unwrap();
    let x = GenSet::parse("s2,s3", 3).unwrap();
    let ts = [0, 0, 0];
    let (g, back) = b3.compose_ribbons(x, &ts);
    let f = b3.ribbon_delta_form(x, &ts).unwrap();
    println!(
        "B3 {{s2,s3}} -> {{{}}}: {}  = exponents {:?}, Δ^{}",
        back.key(),
        b3.format_element(&g),
        f.exponents,
        f.gamma
    );
}
