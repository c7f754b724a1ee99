#pragma once

#include "fermiga/blade.hpp"
#include "fermiga/creation.hpp"
#include "fermiga/errors.hpp"
#include "fermiga/evolution.hpp"
#include "fermiga/extension.hpp"
#include "fermiga/fock.hpp"
#include "fermiga/format.hpp"
#include "fermiga/io.hpp"
#include "fermiga/multivector.hpp"
#include "fermiga/operator.hpp"
#include "fermiga/syntax.hpp"
