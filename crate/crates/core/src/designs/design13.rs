use super::check::check_t_coverage;
use crate::codes::SetSystem;
use crate::error::Result;

/// Base block of the cyclic 2-(13, 4, 1) design; its differences cover
/// every nonzero residue mod 13 once.
pub const BASE_BLOCK_13: [usize; 4] = [0, 1, 3, 9];

/// The 2-(13, 4, 1) design formed by the 13 translates of [`BASE_BLOCK_13`].
pub fn design_13_4() -> Result<SetSystem> {
    let blocks = (0..13).map(|s| BASE_BLOCK_13.iter().map(|&x| (x + s) % 13).collect()).collect();
    let design = SetSystem::new(13, blocks)?;
    check_t_coverage(&design, 2, 1, true)?;
    Ok(design)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn thirteen_blocks_every_pair_once() {
        let d = design_13_4().unwrap();
        assert_eq!(d.len(), 13);
        assert_eq!(d.uniform_size(), Some(4));
        let code = d.to_code().unwrap();
        assert_eq!(code.len(), 13);
        assert_eq!(code.params().d, 6);
    }
}
