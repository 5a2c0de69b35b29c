#pragma once

#include "coxcell/hecke.hpp"

#include <string>

namespace coxcell {

/// Persistent KL table.  Files are a versioned JSON envelope
/// {format_version, type_string, generator_order, coxeter_matrix,
/// entries: [(y_id, w_id, polynomial)], checksum}; ids are canonical
/// ShortLex ids, so files are portable across builds of the same type.

inline constexpr int kCacheFormatVersion = 1;

/// Cache file path for a group inside a cache directory.
std::string cache_path(const std::string& cache_dir, const CoxeterSystem& W);

/// Write the full KL table of a built algebra.  Takes an advisory lock on
/// the file while writing.  Throws CoxcellError if the directory is not
/// writable.
void cache_store(const std::string& cache_dir, const CoxeterSystem& W, const HeckeAlgebra& H);

/// Try to load a cached table into an unbuilt algebra.  Returns true on
/// success (kl_computed() stays 0).  A missing file returns false quietly;
/// a corrupt, checksum-mismatched or version/type-mismatched file returns
/// false with a warning on stderr and is never partially trusted.
bool cache_load(const std::string& cache_dir, const CoxeterSystem& W, HeckeAlgebra& H);

/// Load from cache when possible, otherwise build and store.
void build_with_cache(const std::string& cache_dir, const CoxeterSystem& W, HeckeAlgebra& H);

}  // namespace coxcell
