#pragma once

#include <string>
#include <vector>

#include "vt3/alternating.hpp"
#include "vt3/partition.hpp"

namespace vt3 {

/// Shape parameters of a catalog element; only the fields the element's
/// family uses are read. All used fields must be >= 1 unless noted.
struct CatalogParams {
  int m = 1;
  int k = 1;
  int p = 1;
  int l = 1;
  int n = 1;  // h8 only
};

/// Families of generator elements, one per admissible diagram shape:
///   f1,f2,f3      three distinct rows (m,k,l)        shape (m+k+l, m+k, m)
///   h1.1,h1.2     (m+1,1,1,1)                        params: m
///   h2.*          (m+1,m+1,1,1)                      params: m
///   h3.*          (m+1,m+1,m+1,1)                    params: m
///   h4.1..h4.3    (m+k+1,k+1,1,1)                    params: m,k
///   h5.1..h5.3    (m+k+1,k+1,k+1,1)                  params: m,k
///   h6.1..h6.3    (m+k+1,m+k+1,k+1,1)                params: m,k
///   h7.1..h7.4    (m+k+p+1,k+p+1,p+1,1)              params: m,k,p
///   h8            (n)                                params: n
///   h9            (m,m)                              params: m
///   h10           (m,m,m)                            params: m
///   h11.1,h11.2   (m+k,k)                            params: m,k
///   h12.1,h12.2   (m+k,k,k)                          params: m,k
///   h13.1,h13.2   (m+k,m+k,k)                        params: m,k
///   h14.1..h14.3  (m+k+p,k+p,p)                      params: m,k,p
/// Ids accept both "h11.1" and "h11(1)". Throws std::invalid_argument for
/// unknown ids, std::domain_error for out-of-range parameters.
AlternatingTemplate generator_element(const std::string& id, const CatalogParams& params);

/// The partition the element realizes; expand().degree() == shape.n().
Partition catalog_shape(const std::string& id, const CatalogParams& params);

/// Parameter names the element's family reads, e.g. {"m","k"}.
std::vector<std::string> catalog_param_names(const std::string& id);

/// All valid ids in catalog order.
std::vector<std::string> catalog_ids();

}  // namespace vt3
