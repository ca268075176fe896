#pragma once

#include "argeo/aspic.hpp"
#include "argeo/correspondence.hpp"
#include "argeo/delp.hpp"
#include "argeo/delp_gr.hpp"
#include "argeo/error.hpp"
#include "argeo/framework.hpp"
#include "argeo/game.hpp"
#include "argeo/literal.hpp"
#include "argeo/ordering.hpp"
#include "argeo/parser.hpp"
#include "argeo/postulates.hpp"
#include "argeo/program.hpp"
#include "argeo/rule_set.hpp"
