from wordpack.second_stage.base_second_stage import BaseSecondStage, IdentityStage
from wordpack.second_stage.deflate_stage import DEFLATE_FLAG, DeflateStage
