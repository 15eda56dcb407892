"""O subpacote `utils` contém ferramentas de auxílio às funções do pacote.

Módulos
-------
errors
    `Exceptions` exclusivas das funções do `ImunizacaoRedes`.
padroes
    Valores padrão compartilhados entre os módulos.
parse
    Padronização de inputs das funções do `ImunizacaoRedes`.
resultado
    Modelo base dos objetos de resultado.

"""

from .padroes import PADROES
from .resultado import Resultado
from .typing import Algoritmo, Comando, Escopo, Formato, Modelo, Output, Variante
