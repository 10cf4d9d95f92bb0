//! Space-time diagrams of single-cell (and general word) evolution:
//! grid construction, period detection, support statistics, and ASCII/PGM
//! rendering. Time increases downward; the letter palette is I→' ', X→'1',
//! Y→'2', Z→'3' in ASCII and I=255, X=80, Y=160, Z=0 in 8-bit PGM gray.

use crate::csca::CscaMatrix;
use crate::pauli::{apply_cqca, Letter, PauliWord};

/// Rows of cell letters for t = 0..T over a common window.
pub struct SpacetimeGrid {
    pub xmin: i64,
    pub xmax: i64,
    /// rows[t][x - xmin]; None is the identity letter.
    pub rows: Vec<Vec<Option<Letter>>>,
}

impl SpacetimeGrid {
    pub fn width(&self) -> usize {
        (self.xmax - self.xmin + 1) as usize
    }
}

/// Evolves the seed word for T steps and renders the letters of every
/// intermediate word into a window that is auto-sized to the union of the
/// supports. Phases are ignored for rendering.
pub fn evolve_grid(a: &CscaMatrix, seed: &PauliWord, steps: u64) -> SpacetimeGrid {
    let mut words = Vec::with_capacity(steps as usize + 1);
    let mut cur = seed.clone();
    words.push(cur.clone());
    for _ in 0..steps {
        cur = apply_cqca(a, &cur);
        words.push(cur.clone());
    }
    let mut xmin = 0i64;
    let mut xmax = 0i64;
    for w in &words {
        for x in w.support() {
            xmin = xmin.min(x);
            xmax = xmax.max(x);
        }
    }
    let width = (xmax - xmin + 1) as usize;
    let rows = words
        .iter()
        .map(|w| {
            let mut row = vec![None; width];
            for (&x, &l) in &w.letters {
                row[(x - xmin) as usize] = Some(l);
            }
            row
        })
        .collect();
    SpacetimeGrid { xmin, xmax, rows }
}

/// Smallest t ≤ max_t with aᵗ = 1, if any.
pub fn detect_period(a: &CscaMatrix, max_t: u64) -> Option<u64> {
    let mut p = CscaMatrix::identity();
    for t in 1..=max_t {
        p = p.mul(a);
        if p.is_identity() {
            return Some(t);
        }
    }
    None
}

/// Per-row (non-identity count, leftmost site, rightmost site).
pub fn support_stats(grid: &SpacetimeGrid) -> Vec<(usize, Option<i64>, Option<i64>)> {
    grid.rows
        .iter()
        .map(|row| {
            let mut count = 0;
            let mut left = None;
            let mut right = None;
            for (i, cell) in row.iter().enumerate() {
                if cell.is_some() {
                    count += 1;
                    let x = grid.xmin + i as i64;
                    if left.is_none() {
                        left = Some(x);
                    }
                    right = Some(x);
                }
            }
            (count, left, right)
        })
        .collect()
}

pub fn render_ascii(grid: &SpacetimeGrid) -> String {
    let mut out = String::new();
    for row in &grid.rows {
        for cell in row {
            out.push(match cell {
                None => ' ',
                Some(Letter::X) => '1',
                Some(Letter::Y) => '2',
                Some(Letter::Z) => '3',
            });
        }
        out.push('\n');
    }
    out
}

pub fn render_pgm(grid: &SpacetimeGrid) -> Vec<u8> {
    let mut out = format!("P5\n{} {}\n255\n", grid.width(), grid.rows.len()).into_bytes();
    for row in &grid.rows {
        for cell in row {
            out.push(match cell {
                None => 255,
                Some(Letter::X) => 80,
                Some(Letter::Y) => 160,
                Some(Letter::Z) => 0,
            });
        }
    }
    out
}

pub fn stats_csv(grid: &SpacetimeGrid) -> String {
    let mut out = String::from("t,support_count,leftmost,rightmost\n");
    for (t, (count, left, right)) in support_stats(grid).iter().enumerate() {
        let fmt = |v: &Option<i64>| v.map(|x| x.to_string()).unwrap_or_default();
        out.push_str(&format!("{},{},{},{}\n", t, count, fmt(left), fmt(right)));
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::csca::{fractal_f, gen_h, standard_glider};

    fn w(s: &str) -> PauliWord {
        s.parse().unwrap()
    }

    #[test]
    fn single_z_seed_two_steps() {
        let grid = evolve_grid(&standard_glider(), &w("0:Z"), 2);
        assert_eq!(render_ascii(&grid), "  3  \n 313 \n31313\n");
    }

    #[test]
    fn glider_seed_translates() {
        let grid = evolve_grid(&standard_glider(), &w("0:X 1:Z"), 3);
        let stats = support_stats(&grid);
        for (t, (count, left, right)) in stats.iter().enumerate() {
            assert_eq!(*count, 2);
            assert_eq!(*left, Some(t as i64));
            assert_eq!(*right, Some(t as i64 + 1));
        }
        for (t, row) in grid.rows.iter().enumerate() {
            for (i, cell) in row.iter().enumerate() {
                let x = grid.xmin + i as i64 - t as i64;
                let expect = grid.rows[0]
                    .get(usize::try_from(x - grid.xmin).ok().unwrap_or(usize::MAX))
                    .copied()
                    .flatten();
                assert_eq!(*cell, expect);
            }
        }
    }

    #[test]
    fn light_cone() {
        let a = fractal_f();
        let radius = [&a.a11, &a.a12, &a.a21, &a.a22]
            .iter()
            .map(|p| p.degree_span())
            .max()
            .unwrap();
        let grid = evolve_grid(&a, &w("0:X"), 16);
        for (t, (_, left, right)) in support_stats(&grid).iter().enumerate() {
            let bound = radius * t as i64;
            assert!(left.unwrap() >= -bound && right.unwrap() <= bound);
        }
    }

    #[test]
    fn periods() {
        assert_eq!(detect_period(&gen_h(), 8), Some(2));
        assert_eq!(detect_period(&standard_glider(), 16), None);
        let trace_one: CscaMatrix = "[[1; 1]; [1; 0]]".parse().unwrap();
        assert_eq!(detect_period(&trace_one, 8), Some(3));
    }

    #[test]
    fn periodic_rows_repeat() {
        let grid = evolve_grid(&gen_h(), &w("0:X"), 4);
        assert_eq!(grid.rows[0], grid.rows[2]);
        assert_eq!(grid.rows[1], grid.rows[3]);
    }

    #[test]
    fn fractal_even_rescaling() {
        // Row 2t of the X-seed diagram of f, restricted to even sites,
        // has the same support pattern as row t.
        let grid = evolve_grid(&fractal_f(), &w("0:X"), 64);
        for t in 0..=32usize {
            let full: Vec<bool> = (-(64i64)..=64)
                .map(|x| {
                    grid.rows[t]
                        .get(usize::try_from(x - grid.xmin).ok().unwrap_or(usize::MAX))
                        .copied()
                        .flatten()
                        .is_some()
                })
                .collect();
            let even: Vec<bool> = (-(64i64)..=64)
                .map(|x| {
                    grid.rows[2 * t]
                        .get(usize::try_from(2 * x - grid.xmin).ok().unwrap_or(usize::MAX))
                        .copied()
                        .flatten()
                        .is_some()
                })
                .collect();
            assert_eq!(full, even, "self-similarity fails at t={}", t);
        }
    }

    #[test]
    fn pgm_header() {
        let grid = evolve_grid(&standard_glider(), &w("0:Z"), 2);
        let pgm = render_pgm(&grid);
        assert!(pgm.starts_with(b"P5\n5 3\n255\n"));
        assert_eq!(pgm.len(), b"P5\n5 3\n255\n".len() + 15);
    }
}
