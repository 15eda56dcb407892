"""Imunização de Redes é um pacote para conter a propagação de conteúdo
nocivo em redes sociais por meio do bloqueio de usuários.

Dado o grafo de interações entre usuários e os usuários identificados como
fontes de conteúdo nocivo (sementes), o pacote escolhe até `k` usuários para
bloqueio e mede quantos usuários deixam de ser alcançados pela propagação.

Módulos
-------
- ImunizacaoRedes.grafo
- ImunizacaoRedes.espectral
- ImunizacaoRedes.imunizacao
- ImunizacaoRedes.propagacao
- ImunizacaoRedes.avaliacao
- ImunizacaoRedes.cli

Instalação
----------
- `pip install ImunizacaoRedes`

Dependências
------------
- Python 3.10 ou superior
- numpy
- scipy
- pandas
- pydantic

Licença
-------
- MIT

"""

import logging

from . import avaliacao
from . import espectral
from . import grafo
from . import imunizacao
from . import propagacao
from .utils.errors import *


__version__ = "1.0.0"

logging.getLogger(__name__).addHandler(logging.NullHandler())
