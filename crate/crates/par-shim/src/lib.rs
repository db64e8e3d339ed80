//! Thin seam between rayon and a sequential fallback.
//!
//! Call sites write `use par_shim::prelude::*;` and use `par_iter` / `par_iter_mut` /
//! `par_chunks_mut` / `into_par_iter` exactly as they would with rayon. With the
//! `parallel` feature (the default) those names come straight from rayon's prelude;
//! without it they resolve to sequential stand-ins with identical signatures, so the
//! same code compiles and produces identical results either way.

#[cfg(feature = "parallel")]
pub mod prelude {
    pub use rayon::prelude::*;
}

/// Re-export of the whole rayon crate (thread-pool control etc.) for parallel builds.
#[cfg(feature = "parallel")]
pub use rayon;

#[cfg(not(feature = "parallel"))]
pub mod prelude {
    /// Sequential stand-in for rayon's `par_iter`/`par_chunks` on slices.
    pub trait SeqSlice<T> {
        fn par_iter(&self) -> std::slice::Iter<'_, T>;
        fn par_chunks(&self, size: usize) -> std::slice::Chunks<'_, T>;
    }

    impl<T> SeqSlice<T> for [T] {
        fn par_iter(&self) -> std::slice::Iter<'_, T> {
            self.iter()
        }
        fn par_chunks(&self, size: usize) -> std::slice::Chunks<'_, T> {
            self.chunks(size)
        }
    }

    /// Sequential stand-in for rayon's `par_iter_mut`/`par_chunks_mut` on slices.
    pub trait SeqSliceMut<T> {
        fn par_iter_mut(&mut self) -> std::slice::IterMut<'_, T>;
        fn par_chunks_mut(&mut self, size: usize) -> std::slice::ChunksMut<'_, T>;
    }

    impl<T> SeqSliceMut<T> for [T] {
        fn par_iter_mut(&mut self) -> std::slice::IterMut<'_, T> {
            self.iter_mut()
        }
        fn par_chunks_mut(&mut self, size: usize) -> std::slice::ChunksMut<'_, T> {
            self.chunks_mut(size)
        }
    }

    /// Sequential stand-in for rayon's `into_par_iter`.
    pub trait SeqIntoIter {
        type Iter;
        fn into_par_iter(self) -> Self::Iter;
    }

    impl SeqIntoIter for std::ops::Range<usize> {
        type Iter = std::ops::Range<usize>;
        fn into_par_iter(self) -> Self::Iter {
            self
        }
    }

    impl<T> SeqIntoIter for Vec<T> {
        type Iter = std::vec::IntoIter<T>;
        fn into_par_iter(self) -> Self::Iter {
            self.into_iter()
        }
    }
}

/// True when this build actually fans work out across threads.
pub fn is_parallel() -> bool {
    cfg!(feature = "parallel")
}
