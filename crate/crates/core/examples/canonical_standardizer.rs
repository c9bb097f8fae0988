use artin_markings::{ArtinGroup, AscendingProduct, CparabSimplex, GenSet};

fn main() {
    let b3 = ArtinGroup::from_type_str("B3").unwrap();
    let xs = [GenSet::parse("s1", 3).unwrap(), GenSet::parse("s1,s2", 3).unwrap()];
    let x = b3.parse_element("s3 s2^-1 s1 s3").unwrap();
    let simplex = b3.conj_simplex(&CparabSimplex::standard(&b3, &xs), &x);

    let st = b3.canonical_positive_standardizer(&simplex).unwrap();
    println!("canonical standardizer {}", b3.format_element(&st.g));
    let names: Vec<String> = st.subsets.iter().map(|s| format!("{{{}}}", s.key())).collect();
    println!("standardizes onto {}", names.join(" "));

    // every standardizer is ĝ times an ascending product of Δ powers
    let p = AscendingProduct::over(&st, &[2, -1], 1);
    let h = b3.mul(&st.g, &b3.ascending_element(&p));
    let back = b3.extract_ascending_product(&h, &st).unwrap();
    println!("h = {}", b3.format_element(&h));
    println!("extracted {}", serde_json::to_string(&back.to_json()).unwrap());

    let a3 = ArtinGroup::from_type_str("A3").unwrap();
    let change =
        a3.standardization_change(&[GenSet::parse("s1", 3).unwrap()], &[GenSet::parse("s3", 3).unwrap()]).unwrap();
    println!("A3: {{s1}} to {{s3}} via {}", a3.format_element(&change));
}
