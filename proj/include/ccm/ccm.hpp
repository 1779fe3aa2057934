#pragma once

#include "ccm/error.hpp"
#include "ccm/field.hpp"
#include "ccm/rational_poly.hpp"
#include "ccm/laurent.hpp"
#include "ccm/algebra.hpp"
#include "ccm/representation.hpp"
#include "ccm/homological.hpp"
#include "ccm/grassmann.hpp"
#include "ccm/strings.hpp"
#include "ccm/character.hpp"
#include "ccm/typea.hpp"
#include "ccm/io.hpp"
#include "ccm/suites.hpp"
