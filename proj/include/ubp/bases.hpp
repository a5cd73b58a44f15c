#pragma once

#include "ubp/hopf.hpp"

namespace ubp {

  // Coordinates in the X- and Z-bases are returned as Elements whose key g
  // stands for X_g (respectively Z_g).
  //
  //   X_g = sum_{f <= g} f        Z_g = sum_{f >= g} f
  //
  // in the weak order on P_n. Both changes of basis are unitriangular within
  // each weak-order component and are inverted by back substitution.

  Element from_X_basis(Element const& x_coords);
  Element to_X_basis(Element const& x);

  Element from_Z_basis(Element const& z_coords);
  Element to_Z_basis(Element const& x);

  //! X_g expanded in the monomial basis.
  Element X_element(Ubp const& g);
  //! Z_g expanded in the monomial basis.
  Element Z_element(Ubp const& g);

}  // namespace ubp
