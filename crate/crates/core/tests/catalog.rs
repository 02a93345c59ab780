use framestab::autsearch::{aut_binary, aut_z4};
use framestab::catalog::{self, CatalogEntry, Kind, Origin};
use framestab::frames::{compute_p, enumerate_h_lattice, enumerate_h_orbifold, pointwise_order, structure_codes};
use framestab::{frame_report, FrameOptions, Variant};

/// Recomputes one expected invariant of an entry.
fn compute(entry: &CatalogEntry, name: &str) -> String {
    if entry.kind == Kind::Binary {
        let code = entry.binary_code().unwrap();
        return match name {
            "dim" => code.dim().to_string(),
            "min_weight" => code.min_weight().unwrap().to_string(),
            "aut" => aut_binary(&code).unwrap().order().to_string(),
            _ => panic!("unknown key {name}"),
        };
    }
    let code = entry.z4_code().unwrap();
    match name.split_once('.') {
        None => match name {
            "type_ii" => code.is_type_ii().to_string(),
            "k1" => code.k1().to_string(),
            "k2" => code.k2().to_string(),
            "min_euclidean_weight" => code.min_euclidean_weight().unwrap().to_string(),
            "c0_min_weight" => code.torsion().min_weight().unwrap().to_string(),
            "aut_z4" => aut_z4(&code).unwrap().total_order().to_string(),
            "aut_z4_bar" => aut_z4(&code).unwrap().image.order().to_string(),
            _ => panic!("unknown key {name}"),
        },
        Some((variant, key)) => {
            let variant: Variant = variant.parse().unwrap();
            let sc = structure_codes(&code, variant).unwrap();
            match key {
                "dim_p" => compute_p(&sc).dim().to_string(),
                "pointwise" => {
                    let pw = pointwise_order(&sc);
                    format!("{}+{}", pw.a, pw.b)
                }
                "h_count" => match variant {
                    Variant::Lattice => enumerate_h_lattice(&sc),
                    Variant::Orbifold => enumerate_h_orbifold(&sc),
                }
                .unwrap()
                .count
                .to_string(),
                "stab_order" => frame_report(&code, variant, &FrameOptions::default()).unwrap().stab_order,
                _ => panic!("unknown key {key}"),
            }
        }
    }
}

fn check_entry(id: &str, skip: &[&str]) {
    let entry = catalog::get(id).unwrap();
    assert!(!entry.expected.is_empty(), "{id}");
    for e in &entry.expected {
        if skip.contains(&e.name) {
            continue;
        }
        assert_eq!(compute(&entry, e.name), e.value, "{id}: {}", e.name);
    }
}

#[test]
fn length8_entries() {
    for case in 1..=4 {
        check_entry(&format!("z4-len8-{case}"), &[]);
    }
}

#[test]
fn family_entries() {
    for id in ["bin-golay", "bin-golay-mog", "bin-hamming8", "bin-rm-1-4", "bin-rm-2-4", "bin-even-2", "bin-even-12"] {
        check_entry(id, &[]);
    }
}

#[test]
fn length24_entries() {
    check_entry("z4-pseudo-golay-1", &[]);
    check_entry("z4-leech-standard", &[]);
    check_entry("bin-moonshine-d", &[]);
    // The order-6 group takes about a minute; the acceptance suite runs it.
    check_entry("z4-pseudo-golay-2", &["aut_z4"]);
}

#[test]
fn published_and_computed_are_labelled() {
    let e = catalog::get("z4-len8-4").unwrap();
    assert_eq!(e.expected("aut_z4_bar").unwrap().origin, Origin::Published);
    assert_eq!(e.expected("aut_z4").unwrap().origin, Origin::Computed);
    assert!(e.expected("nonsense").is_none());
}

#[test]
fn listing() {
    let ids = catalog::list();
    assert_eq!(ids.len(), catalog::descriptions().len());
    assert!(ids.iter().any(|i| i == "z4-leech-standard"));
    assert!(ids.iter().any(|i| i == "bin-even-n"));
    let json = serde_json::to_value(catalog::get("bin-hamming8").unwrap()).unwrap();
    assert_eq!(json["kind"], "binary");
    assert_eq!(json["expected"][0]["origin"], "published");
    assert!(catalog::get("z4-len8-1").unwrap().binary_code().is_err());
    assert!(catalog::get("bin-golay").unwrap().z4_code().is_err());
    assert!(catalog::get("bin-even-4097").is_err());
}
