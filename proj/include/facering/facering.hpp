#ifndef FACERING_FACERING_HPP
#define FACERING_FACERING_HPP

#include "cm.hpp"
#include "errors.hpp"
#include "field.hpp"
#include "grobner.hpp"
#include "homology.hpp"
#include "io.hpp"
#include "linalg.hpp"
#include "monomial.hpp"
#include "polynomial.hpp"
#include "rng.hpp"
#include "schubert.hpp"
#include "simplicial_complex.hpp"
#include "sop.hpp"
#include "term_order.hpp"
#include "varindex.hpp"

#endif
