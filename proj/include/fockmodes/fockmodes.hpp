#pragma once

#include "entanglement.hpp"
#include "errors.hpp"
#include "ket_parser.hpp"
#include "mode_unitary.hpp"
#include "nelder_mead.hpp"
#include "occupation.hpp"
#include "optimizer.hpp"
#include "permanent.hpp"
#include "pure_state.hpp"
#include "redefinition.hpp"
#include "unitary_io.hpp"
