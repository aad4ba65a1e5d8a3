//! Block bookkeeping for the semiorthogonal decompositions attached to
//! hypersurfaces, complete intersections and Veronese-type fibrations.
//! Purely combinatorial: tags and twists, listed left to right.

use serde::Serialize;

use crate::error::{Error, Result};

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Block {
    /// `O_Y(twist)`.
    LineBundle { twist: i64 },
    /// A copy of the base category, `q*D(S) ⊗ O(twist)`.
    Base { twist: i64, label: String },
    MatrixFactorization { label: String },
    /// `k(twist)`.
    ExceptionalObject { twist: i64 },
    Geometric { label: String },
    /// `B_index(twist)` of the dual Lefschetz collection.
    Dual { index: i64, twist: i64 },
    /// `A_index(twist)` of the Lefschetz collection.
    Lefschetz { index: i64, twist: i64 },
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SodDescriptor {
    pub case: String,
    pub equivalence: bool,
    pub wall_mu: i64,
    pub blocks: Vec<Block>,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub notes: Vec<String>,
}

impl SodDescriptor {
    pub fn count(&self, pred: impl Fn(&Block) -> bool) -> usize {
        self.blocks.iter().filter(|b| pred(b)).count()
    }

    pub fn to_text(&self) -> String {
        let parts: Vec<String> = self.blocks.iter().map(render_block).collect();
        let mut s = format!(
            "case {}{}, wall_mu = {}: <{}>",
            self.case,
            if self.equivalence { " (equivalence)" } else { "" },
            self.wall_mu,
            parts.join(", ")
        );
        for n in &self.notes {
            s.push_str(&format!("\n  note: {}", n));
        }
        s
    }
}

fn render_block(b: &Block) -> String {
    match b {
        Block::LineBundle { twist } => format!("O({})", twist),
        Block::Base { twist, label } => format!("{}({})", label, twist),
        Block::MatrixFactorization { label } | Block::Geometric { label } => label.clone(),
        Block::ExceptionalObject { twist } => format!("k({})", twist),
        Block::Dual { index, twist } => format!("B_{}({})", index, twist),
        Block::Lefschetz { index, twist } => format!("A_{}({})", index, twist),
    }
}

fn positive(name: &str, v: i64) -> Result<()> {
    if v < 1 {
        return Err(Error::InvalidArgument(format!("{} must be at least 1, got {}", name, v)));
    }
    Ok(())
}

/// Hypersurface of degree `d` in `P^{N-1}`.
pub fn orlov_case(big_n: i64, d: i64) -> Result<SodDescriptor> {
    positive("dimension", big_n)?;
    positive("degree", d)?;
    let mu = big_n - d;
    let mf = Block::MatrixFactorization {
        label: "MF([A^N/G_m], w)".into(),
    };
    Ok(if d < big_n {
        let mut blocks: Vec<Block> = ((d - big_n + 1)..=0).map(|twist| Block::LineBundle { twist }).collect();
        blocks.push(mf);
        SodDescriptor { case: "1".into(), equivalence: false, wall_mu: mu, blocks, notes: Vec::new() }
    } else if d == big_n {
        SodDescriptor { case: "2".into(), equivalence: true, wall_mu: 0, blocks: vec![mf], notes: Vec::new() }
    } else {
        let mut blocks: Vec<Block> = ((big_n - d + 1)..=0).map(|twist| Block::ExceptionalObject { twist }).collect();
        blocks.push(Block::Geometric { label: "D^b(X)".into() });
        SodDescriptor { case: "3".into(), equivalence: false, wall_mu: mu, blocks, notes: Vec::new() }
    })
}

/// Complete intersection of the given degrees in a rank-`rank` bundle over a base.
pub fn relative_ci(rank: i64, degrees: &[i64]) -> Result<SodDescriptor> {
    positive("rank", rank)?;
    if degrees.is_empty() {
        return Err(Error::InvalidArgument("at least one degree is required".into()));
    }
    for &d in degrees {
        positive("degree", d)?;
    }
    let mu = rank - degrees.iter().sum::<i64>();
    Ok(if mu > 0 {
        let mut blocks: Vec<Block> = (0..mu)
            .map(|twist| Block::Base { twist, label: "q*D(S)".into() })
            .collect();
        blocks.push(Block::Geometric { label: "Phi+ D(Q-)".into() });
        SodDescriptor { case: "mu>0".into(), equivalence: false, wall_mu: mu, blocks, notes: Vec::new() }
    } else if mu == 0 {
        SodDescriptor {
            case: "mu=0".into(),
            equivalence: true,
            wall_mu: 0,
            blocks: vec![Block::Geometric { label: "Phi D(Q-)".into() }],
            notes: Vec::new(),
        }
    } else {
        let mut blocks: Vec<Block> = (0..-mu)
            .map(|j| Block::Base { twist: -j, label: "Upsilon0- D(Z)".into() })
            .collect();
        blocks.push(Block::Geometric { label: "Phi- D(Q+)".into() });
        SodDescriptor { case: "mu<0".into(), equivalence: false, wall_mu: mu, blocks, notes: Vec::new() }
    })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct LefschetzShape {
    pub rank_p: i64,
    pub d: i64,
    /// Index of the last block `A_i`.
    pub i: i64,
    /// Width of the last block.
    pub k: i64,
    /// Widths of `A_0, …, A_i`.
    pub widths: Vec<i64>,
}

/// `i = ⌈rk P/d⌉ − 1` and `k = rk P − d·i`.
pub fn lefschetz_blocks(rank_p: i64, d: i64) -> Result<LefschetzShape> {
    positive("rank", rank_p)?;
    positive("degree", d)?;
    let i = (rank_p + d - 1) / d - 1;
    let k = rank_p - d * i;
    let mut widths = vec![d; i as usize];
    widths.push(k);
    Ok(LefschetzShape { rank_p, d, i, k, widths })
}

/// Branches for a codimension-`r` linear section of the degree-`d` Veronese
/// fibration of a rank-`rank_e` bundle. Returns both branches on the boundary
/// `r·d = rank_e`.
pub fn veronese_branch(rank_e: i64, d: i64, r: i64) -> Result<Vec<SodDescriptor>> {
    positive("r", r)?;
    if d < 2 {
        return Err(Error::InvalidArgument(format!("degree must be at least 2, got {}", d)));
    }
    if rank_e < d {
        return Err(Error::InvalidArgument(format!("rank {} is smaller than the degree {}", rank_e, d)));
    }
    let shape = lefschetz_blocks(rank_e, d)?;
    let mut out = Vec::new();
    if r * d <= rank_e {
        let mut blocks = vec![Block::Geometric { label: "D(X_L)".into() }];
        blocks.extend((r..=shape.i).map(|index| Block::Lefschetz { index, twist: index - r + 1 }));
        out.push(SodDescriptor {
            case: "geometric".into(),
            equivalence: false,
            wall_mu: rank_e - r * d,
            blocks,
            notes: Vec::new(),
        });
    }
    if r * d >= rank_e {
        let k = rank_e - r - 1;
        let j = rank_e - 1;
        let mut blocks: Vec<Block> = (k..=j).rev().map(|index| Block::Dual { index, twist: -index }).collect();
        blocks.push(Block::Geometric { label: "D(Y_L)".into() });
        out.push(SodDescriptor {
            case: "dual".into(),
            equivalence: false,
            wall_mu: rank_e - r * d,
            blocks,
            notes: vec![format!(
                "k = rank - r - 1 = {}; first twist follows the dual collection B_j(-j) rather than B_j(j)",
                k
            )],
        });
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn orlov_shapes() {
        let a = orlov_case(5, 3).unwrap();
        assert_eq!(a.case, "1");
        assert_eq!(a.wall_mu, 2);
        assert_eq!(
            a.blocks[..2],
            [Block::LineBundle { twist: -1 }, Block::LineBundle { twist: 0 }]
        );
        assert!(matches!(a.blocks[2], Block::MatrixFactorization { .. }));
        let b = orlov_case(4, 4).unwrap();
        assert!(b.equivalence);
        let c = orlov_case(3, 5).unwrap();
        assert_eq!(
            c.blocks[..2],
            [Block::ExceptionalObject { twist: -1 }, Block::ExceptionalObject { twist: 0 }]
        );
        assert!(matches!(c.blocks[2], Block::Geometric { .. }));
        assert!(orlov_case(0, 3).is_err());
    }

    #[test]
    fn relative_shapes() {
        let a = relative_ci(5, &[2, 2]).unwrap();
        assert_eq!(a.wall_mu, 1);
        assert_eq!(a.blocks.len(), 2);
        assert!(relative_ci(4, &[2, 2]).unwrap().equivalence);
        let c = relative_ci(3, &[2, 3]).unwrap();
        assert_eq!(c.wall_mu, -2);
        let twists: Vec<i64> = c
            .blocks
            .iter()
            .filter_map(|b| match b {
                Block::Base { twist, .. } => Some(*twist),
                _ => None,
            })
            .collect();
        assert_eq!(twists, vec![0, -1]);
        assert!(relative_ci(3, &[]).is_err());
    }

    #[test]
    fn lefschetz_examples() {
        let s = lefschetz_blocks(5, 2).unwrap();
        assert_eq!((s.k, s.i), (1, 2));
        let s = lefschetz_blocks(6, 3).unwrap();
        assert_eq!((s.k, s.i), (3, 1));
        let s = lefschetz_blocks(4, 4).unwrap();
        assert_eq!((s.k, s.i), (4, 0));
    }

    #[test]
    fn veronese_examples() {
        let g = veronese_branch(6, 3, 1).unwrap();
        assert_eq!(g.len(), 1);
        assert_eq!(g[0].case, "geometric");
        assert_eq!(g[0].blocks[1..], [Block::Lefschetz { index: 1, twist: 1 }]);
        let d = veronese_branch(6, 3, 4).unwrap();
        assert_eq!(d.len(), 1);
        assert_eq!(d[0].case, "dual");
        assert_eq!(d[0].blocks.iter().rev().nth(1), Some(&Block::Dual { index: 1, twist: -1 }));
        let both = veronese_branch(6, 3, 2).unwrap();
        assert_eq!(both.len(), 2);
        assert!(veronese_branch(2, 3, 1).is_err());
    }
}
