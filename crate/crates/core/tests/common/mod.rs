#![allow(dead_code)]

use multiserial::{ArrowId, DefiningPair, Path, Presentation, Quiver, SimpleCycle};
use rand::seq::SliceRandom;
use rand::Rng;

pub fn quiver(vs: &[&str], arrows: &[(&str, &str, &str)]) -> Quiver {
    Quiver::from_parts(
        vs.iter().map(|s| s.to_string()),
        arrows
            .iter()
            .map(|(n, s, t)| (n.to_string(), s.to_string(), t.to_string())),
    )
    .unwrap()
}

pub fn cycle(q: &Quiver, names: &[&str]) -> SimpleCycle {
    q.simple_cycle(q.path_by_names(names).unwrap()).unwrap()
}

pub fn presentation(q: Quiver, zeros: &[&[&str]], n: usize) -> Presentation {
    let zs: Vec<Path> = zeros.iter().map(|z| q.path_by_names(z).unwrap()).collect();
    Presentation::new(q, zs, vec![], n).unwrap()
}

pub fn loop_mu2() -> DefiningPair {
    let q = quiver(&["1"], &[("a", "1", "1")]);
    DefiningPair::close_under_rotation(q.clone(), [(cycle(&q, &["a"]), 2)]).unwrap()
}

pub fn a3_gentle() -> Presentation {
    presentation(quiver(&["1", "2", "3"], &[("a", "1", "2"), ("b", "2", "3")]), &[&["a", "b"]], 2)
}

pub fn two_cycle() -> Presentation {
    presentation(
        quiver(&["1", "2"], &[("a", "1", "2"), ("b", "2", "1")]),
        &[&["a", "b", "a"], &["b", "a", "b"]],
        3,
    )
}

/// Cycle representatives drawn as arrow-disjoint closed walks, closed under
/// rotation. Some draws break D0 or D3 on purpose; callers filter with
/// `validate`.
pub fn random_pair_candidate<R: Rng>(rng: &mut R) -> DefiningPair {
    let n_vertices = rng.gen_range(1..=5usize);
    let mut arrows: Vec<(String, usize, usize)> = Vec::new();
    let mut reps: Vec<Vec<usize>> = Vec::new();
    let mut mults = Vec::new();
    let classes = rng.gen_range(1..=4);
    for _ in 0..classes {
        let room = 8 - arrows.len();
        if room == 0 {
            break;
        }
        let len = rng.gen_range(1..=room.min(4));
        let walk: Vec<usize> = (0..len).map(|_| rng.gen_range(0..n_vertices)).collect();
        let mut ids = Vec::new();
        for i in 0..len {
            ids.push(arrows.len());
            arrows.push((format!("x{}", arrows.len()), walk[i], walk[(i + 1) % len]));
        }
        let start = rng.gen_range(0..len);
        ids.rotate_left(start);
        reps.push(ids);
        mults.push(rng.gen_range(1..=3u32));
    }
    if arrows.len() < 8 && rng.gen_bool(0.1) {
        let (s, t) = (rng.gen_range(0..n_vertices), rng.gen_range(0..n_vertices));
        arrows.push((format!("x{}", arrows.len()), s, t));
    }
    let used: Vec<usize> = (0..n_vertices)
        .filter(|v| arrows.iter().any(|(_, s, t)| s == v || t == v))
        .collect();
    let q = Quiver::from_parts(
        used.iter().map(|v| format!("v{v}")),
        arrows
            .iter()
            .map(|(n, s, t)| (n.clone(), format!("v{s}"), format!("v{t}"))),
    )
    .unwrap();
    let reps = reps.into_iter().zip(mults).map(|(ids, m)| {
        let ids: Vec<ArrowId> = ids.into_iter().map(ArrowId).collect();
        (q.simple_cycle(q.path(&ids).unwrap()).unwrap(), m)
    });
    DefiningPair::close_under_rotation(q.clone(), reps.collect::<Vec<_>>()).unwrap()
}

/// A quiver with up to `max_vertices` vertices and `1..=max_arrows` arrows.
pub fn random_quiver<R: Rng>(rng: &mut R, max_vertices: usize, max_arrows: usize) -> Quiver {
    let n = rng.gen_range(1..=max_vertices);
    let m = rng.gen_range(1..=max_arrows);
    Quiver::from_parts(
        (0..n).map(|v| format!("v{v}")),
        (0..m).map(|i| {
            (
                format!("x{i}"),
                format!("v{}", rng.gen_range(0..n)),
                format!("v{}", rng.gen_range(0..n)),
            )
        }),
    )
    .unwrap()
}

/// A random partial injection σ respecting composability.
pub fn random_sigma<R: Rng>(rng: &mut R, q: &Quiver, keep: f64) -> Vec<Option<ArrowId>> {
    let mut order: Vec<ArrowId> = q.arrow_ids().collect();
    order.shuffle(rng);
    let mut taken = vec![false; q.arrow_count()];
    let mut sigma = vec![None; q.arrow_count()];
    for a in order {
        let free: Vec<ArrowId> = q.arrows_from(q.target(a)).filter(|b| !taken[b.0]).collect();
        if !free.is_empty() && rng.gen_bool(keep) {
            let b = *free.choose(rng).unwrap();
            taken[b.0] = true;
            sigma[a.0] = Some(b);
        }
    }
    sigma
}

fn sigma_chain(q: &Quiver, sigma: &[Option<ArrowId>], a: ArrowId, len: usize) -> Option<Path> {
    let mut arrows = vec![a];
    while arrows.len() < len {
        arrows.push(sigma[arrows.last().unwrap().0]?);
    }
    q.path(&arrows).ok()
}

/// A presentation satisfying condition (M) by construction: every two-path
/// off σ is a zero relation, plus occasional longer monomials and binomials
/// between σ-chains with common endpoints.
pub fn random_presentation<R: Rng>(rng: &mut R) -> Presentation {
    let q = random_quiver(rng, 5, 8);
    let n = rng.gen_range(2..=4usize);
    let sigma = if n == 2 { vec![None; q.arrow_count()] } else { random_sigma(rng, &q, 0.75) };
    let mut zeros = Vec::new();
    for a in q.arrow_ids() {
        for b in q.arrows_from(q.target(a)) {
            if sigma[a.0] != Some(b) {
                zeros.push(q.path(&[a, b]).unwrap());
            }
        }
    }
    let mut chains: Vec<Path> = Vec::new();
    for len in 2..n {
        chains.extend(q.arrow_ids().filter_map(|a| sigma_chain(&q, &sigma, a, len)));
    }
    let mut equal = Vec::new();
    for c in &chains {
        if c.len() >= 3 && rng.gen_bool(0.2) {
            zeros.push(c.clone());
            continue;
        }
        let partner = chains.iter().find(|d| {
            *d != c && d.len() == c.len() && d.source() == c.source() && d.target() == c.target()
        });
        if let Some(d) = partner {
            if rng.gen_bool(0.5) {
                equal.push((c.clone(), d.clone()));
            }
        }
    }
    Presentation::new(q, zeros, equal, n).unwrap()
}

/// All length-two paths zero and `N = 2`.
pub fn radical_square_zero<R: Rng>(rng: &mut R) -> Presentation {
    let q = random_quiver(rng, 5, 8);
    let mut zeros = Vec::new();
    for a in q.arrow_ids() {
        for b in q.arrows_from(q.target(a)) {
            zeros.push(q.path(&[a, b]).unwrap());
        }
    }
    Presentation::new(q, zeros, vec![], 2).unwrap()
}
