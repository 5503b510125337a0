//! Size limits for the exponential operations.
//!
//! Every default can be overridden through the environment:
//!
//! | variable                        | default | limits                                  |
//! |---------------------------------|---------|-----------------------------------------|
//! | `FRAMEKIT_MAX_POSET`            | 6       | `enumerate_posets`                      |
//! | `FRAMEKIT_MAX_LITERAL_POINTS`   | 10      | literal clopen/nuclear quantification   |
//! | `FRAMEKIT_MAX_ORACLE_ELEMENTS`  | 16      | brute-force nucleus enumeration         |
//! | `FRAMEKIT_MAX_TOWER_DEPTH`      | 2       | depth of the assembly tower             |
//! | `FRAMEKIT_MAX_TOWER_POINTS`     | 3       | `|X_L|` admitted for a depth-2 tower    |
//! | `FRAMEKIT_MAX_TOPOLOGY_POINTS`  | 4       | `enumerate_topologies`                  |

use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Bounds {
    pub poset: usize,
    pub literal_points: usize,
    pub oracle_elements: usize,
    pub tower_depth: usize,
    pub tower_points: usize,
    pub topology_points: usize,
}

impl Default for Bounds {
    fn default() -> Self {
        Bounds {
            poset: 6,
            literal_points: 10,
            oracle_elements: 16,
            tower_depth: 2,
            tower_points: 3,
            topology_points: 4,
        }
    }
}

impl Bounds {
    /// Defaults, overridden by any `FRAMEKIT_MAX_*` variables that parse.
    pub fn from_env() -> Result<Self> {
        let mut b = Bounds::default();
        let vars: [(&str, &mut usize); 6] = [
            ("FRAMEKIT_MAX_POSET", &mut b.poset),
            ("FRAMEKIT_MAX_LITERAL_POINTS", &mut b.literal_points),
            ("FRAMEKIT_MAX_ORACLE_ELEMENTS", &mut b.oracle_elements),
            ("FRAMEKIT_MAX_TOWER_DEPTH", &mut b.tower_depth),
            ("FRAMEKIT_MAX_TOWER_POINTS", &mut b.tower_points),
            ("FRAMEKIT_MAX_TOPOLOGY_POINTS", &mut b.topology_points),
        ];
        for (name, slot) in vars {
            if let Ok(raw) = std::env::var(name) {
                *slot = raw.trim().parse().map_err(|_| {
                    Error::Malformed(format!("{name}={raw:?} is not a natural number"))
                })?;
            }
        }
        Ok(b)
    }

    pub(crate) fn check(what: &'static str, size: usize, bound: usize) -> Result<()> {
        if size > bound {
            Err(Error::BoundExceeded { what, size, bound })
        } else {
            Ok(())
        }
    }
}
