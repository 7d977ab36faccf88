use std::sync::Arc;

use ghecke::hecke::{builtin_module, induced_module, io, parabolic_one_dim, steinberg, trivial};
use ghecke::homology::{character_ep, ext, SOLVER_CAP};
use ghecke::rational::q;
use ghecke::weyl::DEFAULT_CAP;
use ghecke::{Family, RootDatum, WeylGroupTable};

fn group(f: Family, n: usize) -> Arc<WeylGroupTable> {
    Arc::new(WeylGroupTable::new(Arc::new(RootDatum::with_unit_parameters(f, n).unwrap())).unwrap())
}

#[test]
fn json_roundtrip_keeps_ext() {
    let t = group(Family::B, 2);
    let u = parabolic_one_dim(&t, &[0], &[-1], &[q(0), q(0)]).unwrap();
    let x = induced_module(&u, &[q(0), q(1)]).unwrap();
    let text = serde_json::to_string(&io::to_json(&x)).unwrap();
    let y = io::parse_module(&text, DEFAULT_CAP).unwrap();
    assert_eq!(x, y);
    assert_eq!(ext(&x, &x, None, SOLVER_CAP).unwrap().result.dims, ext(&y, &y, None, SOLVER_CAP).unwrap().result.dims);
}

#[test]
fn ep_agrees_with_characters_on_g2() {
    let t = group(Family::G, 2);
    let mods = [steinberg(&t), trivial(&t), builtin_module(&t, "principal").unwrap()];
    for x in &mods {
        for y in &mods {
            let r = ext(x, y, None, SOLVER_CAP).unwrap().result;
            assert_eq!(q(r.ep), character_ep(x, y).unwrap());
        }
    }
}
