"""
Flask应用初始化
"""

from flask import Flask
from flask_restx import Api

from src import __version__
from src.api.routes.health_routes import health_bp, ns as health_ns
from src.api.routes.p1f_routes import p1f_bp, ns as p1f_ns


def create_app() -> Flask:
    """创建Flask应用"""
    app = Flask(__name__)

    # 初始化API文档
    api = Api(
        app,
        version=__version__,
        title='P1F API',
        description='完美1-因子分解的校验、规范化、不变量与拉丁方接口文档',
        doc='/api/docs',
        prefix='/api'
    )

    # 添加所有命名空间
    api.add_namespace(health_ns)
    api.add_namespace(p1f_ns)

    # 注册蓝图
    app.register_blueprint(p1f_bp)
    app.register_blueprint(health_bp)

    return app
