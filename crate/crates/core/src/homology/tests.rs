use std::sync::Arc;

use super::*;
use crate::hecke::{builtin_module, principal_series, steinberg, theta_structure, trivial};
use crate::rational::{binomial, q_frac};
use crate::rootsys::{Family, RootDatum};
use crate::weyl::WeylGroupTable;

fn table(f: Family, n: usize) -> Arc<WeylGroupTable> {
    let d = Arc::new(RootDatum::with_unit_parameters(f, n).unwrap());
    Arc::new(WeylGroupTable::new(d).unwrap())
}

fn qs(xs: &[i64]) -> Vec<Q> {
    xs.iter().map(|&x| q(x)).collect()
}

fn with_theta(x: &HModule, y: &HModule) -> ExtComputation {
    let tx = theta_structure(x).unwrap().matrix;
    let ty = theta_structure(y).unwrap().matrix;
    ext(x, y, Some((&tx, &ty)), SOLVER_CAP).unwrap()
}

#[test]
fn steinberg_hom_spaces() {
    let t = table(Family::A, 2);
    let st = steinberg(&t);
    assert_eq!(hom_w_basis(&st, &st, 0, SOLVER_CAP).unwrap().dim(), 1);
    assert_eq!(hom_w_basis(&st, &st, 1, SOLVER_CAP).unwrap().dim(), 0);
    // sgn ⊗ det = triv, so Hom_W(St ⊗ ∧^2 V, St) = 0
    assert_eq!(hom_w_basis(&st, &st, 2, SOLVER_CAP).unwrap().dim(), 0);
}

#[test]
fn steinberg_self_ext() {
    for (f, n) in [(Family::A, 1), (Family::A, 2), (Family::B, 2), (Family::G, 2), (Family::A, 3)] {
        let t = table(f, n);
        let st = steinberg(&t);
        let c = with_theta(&st, &st);
        let mut dims = vec![0; n + 1];
        dims[0] = 1;
        assert_eq!(c.result.dims, dims);
        assert_eq!(c.result.ep, 1);
        assert_eq!(c.result.theta_traces.as_ref().unwrap()[0], q(1));
        assert_eq!(c.result.extended_dims.as_ref().unwrap(), &dims);
        assert!(c.checks.all_hold());
    }
}

#[test]
fn principal_series_at_zero() {
    let t = table(Family::A, 2);
    let x = principal_series(&t, &qs(&[0, 0])).unwrap();
    let c = with_theta(&x, &x);
    assert_eq!(c.result.dims, vec![1, 2, 1]);
    assert_eq!(c.result.theta_traces.clone().unwrap(), qs(&[1, 0, -1]));
    assert_eq!(c.result.extended_dims.clone().unwrap(), vec![1, 1, 0]);
    assert_eq!(c.result.ep_theta, Some(q(0)));
    assert!(c.checks.all_hold());
}

#[test]
fn regular_principal_series_gives_binomials() {
    for (f, n) in [(Family::A, 1), (Family::A, 2), (Family::B, 2)] {
        let t = table(f, n);
        let g: Vec<Q> = (0..n).map(|i| q_frac(2, 2 * i as i64 + 5)).collect();
        let x = principal_series(&t, &g).unwrap();
        let dims = ext_dims(&x, &x).unwrap().dims;
        let expected: Vec<usize> = (0..=n).map(|i| binomial(n, i) as usize).collect();
        assert_eq!(dims, expected, "{f}{n}");
    }
}

#[test]
fn distinct_central_characters_kill_ext() {
    let t = table(Family::A, 2);
    let st = steinberg(&t);
    let ps = principal_series(&t, &qs(&[0, 0])).unwrap();
    let r = ext_dims(&st, &ps).unwrap();
    assert_eq!(r.dims, vec![0, 0, 0]);
    assert_eq!(character_ep(&st, &ps).unwrap(), q(0));
}

#[test]
fn steinberg_and_trivial_share_central_character() {
    let t = table(Family::A, 2);
    let (st, tr) = (steinberg(&t), trivial(&t));
    let r = ext_dims(&st, &tr).unwrap();
    assert_eq!(q(r.ep), character_ep(&st, &tr).unwrap());
    assert!(r.dims.iter().any(|&d| d > 0));
}

#[test]
fn pairings_match_characters() {
    let t = table(Family::A, 2);
    let mods: Vec<HModule> = ["st", "triv", "principal", "induced:1", "induced:2:nu=1/2,0", "rigid:1"]
        .iter()
        .map(|s| builtin_module(&t, s).unwrap_or_else(|e| panic!("{s}: {e}")))
        .collect();
    for x in &mods {
        for y in &mods {
            let c = ext(x, y, None, SOLVER_CAP).unwrap();
            assert!(c.checks.all_hold());
            assert_eq!(q(c.result.ep), character_ep(x, y).unwrap(), "{} vs {}", x.label(), y.label());
            if let (Ok(tx), Ok(ty)) = (theta_structure(x), theta_structure(y)) {
                let c = ext(x, y, Some((&tx.matrix, &ty.matrix)), SOLVER_CAP).unwrap();
                assert_eq!(
                    c.result.ep_theta.unwrap(),
                    character_ep_theta(x, y, &tx.matrix, &ty.matrix).unwrap(),
                    "{} vs {}",
                    x.label(),
                    y.label()
                );
            }
        }
    }
}

#[test]
fn rigid_reports() {
    let t = table(Family::A, 2);
    for j in [vec![0], vec![1], vec![0, 1]] {
        let r = rigid_verification(&t, &j, RigidMode::Full).unwrap();
        for c in &r.checks {
            assert!(c.pass, "{j:?} {}: expected {} got {}", c.name, c.expected, c.actual);
        }
    }
    let r = rigid_verification(&t, &[0], RigidMode::Full).unwrap();
    assert_eq!(r.result.as_ref().unwrap().dims, vec![1, 1, 0]);
    assert_eq!(r.result.unwrap().ep_theta, Some(q(2)));
}

#[test]
fn deformation() {
    let t = table(Family::A, 2);
    let rep = deformation_check(&t, &[0], &[q(0), q_frac(3, 7)]).unwrap();
    assert!(rep.central_characters_differ && rep.ext_vanishes && !rep.degenerate);
    assert!(rep.ep_theta.is_none_or(|e| e == q(0)));
    let rep = deformation_check(&t, &[], &[q(1), q(1)]).unwrap();
    assert!(rep.res_w_theta_isomorphic);
}

#[test]
fn solver_cap_is_enforced() {
    let t = table(Family::A, 2);
    let x = principal_series(&t, &qs(&[0, 0])).unwrap();
    assert!(matches!(hom_w_basis(&x, &x, 1, 10), Err(Error::SolverCap(_))));
}

#[test]
fn json_shape() {
    let r = ExtResult::from_dims(vec![1, 2, 1]).with_traces(qs(&[1, 0, -1])).unwrap();
    let v = r.to_json();
    assert_eq!(v["dims"], serde_json::json!([1, 2, 1]));
    assert_eq!(v["theta_traces"], serde_json::json!(["1", "0", "-1"]));
    assert_eq!(v["ep_theta"], "0");
    assert_eq!(v["extended_dims"], serde_json::json!([1, 1, 0]));
    assert!(ExtResult::from_dims(vec![1]).with_traces(qs(&[0])).is_err());
}
