use super::{KernelError, Matroid};
use crate::bits::{self, Mask};

impl Matroid {
    /// `M \ delete / contract`, relabelled by order-preserving compaction.
    pub fn minor(&self, delete: Mask, contract: Mask) -> Result<Matroid, KernelError> {
        let g = self.ground();
        if (delete | contract) & !g != 0 {
            return Err(KernelError::OutOfRange(bits::to_vec(
                (delete | contract) & !g,
            )));
        }
        if delete & contract != 0 {
            return Err(KernelError::OverlappingSets(bits::to_vec(
                delete & contract,
            )));
        }
        Ok(self.minor_unchecked(delete, contract))
    }

    fn minor_unchecked(&self, delete: Mask, contract: Mask) -> Matroid {
        // Bases of M/C are B - C for bases meeting C in a basis of C; bases of
        // (M/C)\D are the members avoiding D as much as possible, minus D.
        let rc = self
            .bases
            .iter()
            .map(|&b| bits::size(b & contract))
            .max()
            .unwrap_or(0);
        let contracted = self
            .bases
            .iter()
            .filter(|&&b| bits::size(b & contract) == rc);
        let dmin = contracted
            .clone()
            .map(|&b| bits::size(b & delete))
            .min()
            .unwrap_or(0);
        let removed = delete | contract;
        let bases = contracted
            .filter(|&&b| bits::size(b & delete) == dmin)
            .map(|&b| bits::compact(b, removed))
            .collect();
        Matroid::from_bases_unchecked(self.n - bits::size(removed), bases)
    }

    pub fn delete(&self, e: usize) -> Matroid {
        assert!(e < self.n);
        self.minor_unchecked(bits::bit(e), 0)
    }

    pub fn contract(&self, e: usize) -> Matroid {
        assert!(e < self.n);
        self.minor_unchecked(0, bits::bit(e))
    }
}
