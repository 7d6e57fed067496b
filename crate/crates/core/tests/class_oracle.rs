//! Independent oracle for the curated conjugacy-class data: build each
//! binary polyhedral group as an explicit set of unit quaternions, compute
//! its conjugacy classes by brute force, and compare the (size, trace)
//! multiset with the catalog. The embedding q = a+bi+cj+dk ↦ SU(2) has
//! trace 2a.

use mckay::groups::{class_data, GroupKind};

const EPS: f64 = 1e-9;

#[derive(Clone, Copy, Debug)]
struct Quat {
    a: f64,
    b: f64,
    c: f64,
    d: f64,
}

impl Quat {
    fn new(a: f64, b: f64, c: f64, d: f64) -> Self {
        Quat { a, b, c, d }
    }

    fn mul(self, o: Quat) -> Quat {
        Quat {
            a: self.a * o.a - self.b * o.b - self.c * o.c - self.d * o.d,
            b: self.a * o.b + self.b * o.a + self.c * o.d - self.d * o.c,
            c: self.a * o.c - self.b * o.d + self.c * o.a + self.d * o.b,
            d: self.a * o.d + self.b * o.c - self.c * o.b + self.d * o.a,
        }
    }

    // inverse of a unit quaternion
    fn conj(self) -> Quat {
        Quat::new(self.a, -self.b, -self.c, -self.d)
    }

    fn close_to(self, o: Quat) -> bool {
        (self.a - o.a).abs() < EPS
            && (self.b - o.b).abs() < EPS
            && (self.c - o.c).abs() < EPS
            && (self.d - o.d).abs() < EPS
    }

    fn trace(self) -> f64 {
        2.0 * self.a
    }
}

fn find(elements: &[Quat], q: Quat) -> Option<usize> {
    elements.iter().position(|e| e.close_to(q))
}

/// Every element must be a unit quaternion and every product must land back
/// in the set.
fn assert_group(elements: &[Quat]) {
    for &g in elements {
        let norm = g.a * g.a + g.b * g.b + g.c * g.c + g.d * g.d;
        assert!((norm - 1.0).abs() < EPS, "non-unit element {g:?}");
    }
    for &g in elements {
        for &h in elements {
            assert!(
                find(elements, g.mul(h)).is_some(),
                "not closed: {g:?} * {h:?}"
            );
        }
    }
}

/// Conjugacy classes by brute force, as (size, trace) pairs.
fn conjugacy_classes(elements: &[Quat]) -> Vec<(usize, f64)> {
    let n = elements.len();
    let mut assigned = vec![false; n];
    let mut classes = Vec::new();
    for start in 0..n {
        if assigned[start] {
            continue;
        }
        let mut members = Vec::new();
        for &x in elements {
            let conj = x.mul(elements[start]).mul(x.conj());
            let idx = find(elements, conj).expect("conjugate stays in the group");
            if !assigned[idx] {
                assigned[idx] = true;
                members.push(idx);
            }
        }
        classes.push((members.len(), elements[start].trace()));
    }
    classes
}

fn sorted(mut classes: Vec<(usize, f64)>) -> Vec<(usize, f64)> {
    // quantize the trace key so float noise (2cos(π/2) = 6e-17) cannot
    // reorder classes whose traces are genuinely equal
    let bucket = |t: f64| (t / 1e-6).round() as i64;
    classes.sort_by(|x, y| bucket(x.1).cmp(&bucket(y.1)).then(x.0.cmp(&y.0)));
    classes
}

fn assert_matches_catalog(kind: GroupKind, elements: &[Quat]) {
    assert_group(elements);
    let computed = sorted(conjugacy_classes(elements));
    let catalog = sorted(
        class_data(kind)
            .unwrap()
            .classes
            .iter()
            .map(|c| (c.size as usize, c.chi_v.value()))
            .collect(),
    );
    assert_eq!(computed.len(), catalog.len(), "{}", kind.name());
    for (got, want) in computed.iter().zip(&catalog) {
        assert_eq!(
            got.0,
            want.0,
            "{}: class size at trace {}",
            kind.name(),
            want.1
        );
        assert!(
            (got.1 - want.1).abs() < EPS,
            "{}: trace {} vs {}",
            kind.name(),
            got.1,
            want.1
        );
    }
}

/// The 8 Lipschitz units together with the 16 half-integer units.
fn binary_tetrahedral() -> Vec<Quat> {
    let mut elements = lipschitz_units();
    for sa in [0.5, -0.5] {
        for sb in [0.5, -0.5] {
            for sc in [0.5, -0.5] {
                for sd in [0.5, -0.5] {
                    elements.push(Quat::new(sa, sb, sc, sd));
                }
            }
        }
    }
    elements
}

fn lipschitz_units() -> Vec<Quat> {
    let mut elements = Vec::new();
    for axis in 0..4 {
        for sign in [1.0, -1.0] {
            let mut v = [0.0; 4];
            v[axis] = sign;
            elements.push(Quat::new(v[0], v[1], v[2], v[3]));
        }
    }
    elements
}

/// Adds the 24 elements with two coordinates ±1/√2 to the tetrahedral set.
fn binary_octahedral() -> Vec<Quat> {
    let mut elements = binary_tetrahedral();
    let r = std::f64::consts::FRAC_1_SQRT_2;
    for i in 0..4 {
        for j in i + 1..4 {
            for si in [r, -r] {
                for sj in [r, -r] {
                    let mut v = [0.0; 4];
                    v[i] = si;
                    v[j] = sj;
                    elements.push(Quat::new(v[0], v[1], v[2], v[3]));
                }
            }
        }
    }
    elements
}

/// The 120 unit icosians: lipschitz + half-integer units plus all even
/// coordinate permutations of (0, ±1, ±1/φ, ±φ)/2.
fn binary_icosahedral() -> Vec<Quat> {
    let phi = (1.0 + 5f64.sqrt()) / 2.0;
    let mut elements = binary_tetrahedral();
    let even_perms: [[usize; 4]; 12] = [
        [0, 1, 2, 3],
        [0, 2, 3, 1],
        [0, 3, 1, 2],
        [1, 0, 3, 2],
        [1, 2, 0, 3],
        [1, 3, 2, 0],
        [2, 0, 1, 3],
        [2, 1, 3, 0],
        [2, 3, 0, 1],
        [3, 0, 2, 1],
        [3, 1, 0, 2],
        [3, 2, 1, 0],
    ];
    for perm in even_perms {
        for s1 in [0.5, -0.5] {
            for s2 in [0.5 / phi, -0.5 / phi] {
                for s3 in [0.5 * phi, -0.5 * phi] {
                    let base = [0.0, s1, s2, s3];
                    let mut v = [0.0; 4];
                    for (slot, &from) in perm.iter().enumerate() {
                        v[slot] = base[from];
                    }
                    elements.push(Quat::new(v[0], v[1], v[2], v[3]));
                }
            }
        }
    }
    elements
}

/// x = exp(iπ/n) and y = j generate the binary dihedral group of order 4n.
fn binary_dihedral(n: u32) -> Vec<Quat> {
    let mut elements = Vec::new();
    for r in 0..2 * n {
        let theta = std::f64::consts::PI * f64::from(r) / f64::from(n);
        let x_r = Quat::new(theta.cos(), theta.sin(), 0.0, 0.0);
        elements.push(x_r);
        elements.push(Quat::new(0.0, 0.0, 1.0, 0.0).mul(x_r));
    }
    elements
}

#[test]
fn tetrahedral_classes_match_catalog() {
    let elements = binary_tetrahedral();
    assert_eq!(elements.len(), 24);
    assert_matches_catalog(GroupKind::BinaryTetrahedral, &elements);
}

#[test]
fn octahedral_classes_match_catalog() {
    let elements = binary_octahedral();
    assert_eq!(elements.len(), 48);
    assert_matches_catalog(GroupKind::BinaryOctahedral, &elements);
}

#[test]
fn icosahedral_classes_match_catalog() {
    let elements = binary_icosahedral();
    assert_eq!(elements.len(), 120);
    assert_matches_catalog(GroupKind::BinaryIcosahedral, &elements);
}

#[test]
fn dihedral_classes_match_catalog() {
    for n in 2..=8 {
        let elements = binary_dihedral(n);
        assert_eq!(elements.len(), 4 * n as usize);
        assert_matches_catalog(GroupKind::BinaryDihedral(n), &elements);
    }
}

#[test]
fn cyclic_classes_match_catalog() {
    for n in 2..=8u32 {
        let elements: Vec<Quat> = (0..n)
            .map(|r| {
                let theta = 2.0 * std::f64::consts::PI * f64::from(r) / f64::from(n);
                Quat::new(theta.cos(), theta.sin(), 0.0, 0.0)
            })
            .collect();
        assert_matches_catalog(GroupKind::Cyclic(n), &elements);
    }
}
