"""Flask application factory exposing the tool registry over HTTP."""

from flasgger import Swagger
from flask import Flask, jsonify, request
from flask_cors import CORS
from flask_limiter import Limiter
from flask_limiter.util import get_remote_address

from . import __version__
from .config import get_settings
from .server import get_tool_server
from .utils.logging import get_logger, setup_logging

logger = get_logger("flask_app")


def create_app() -> Flask:
    """Create and configure the Flask application."""
    app = Flask(__name__)
    settings = get_settings()

    app.config["SECRET_KEY"] = settings.secret_key
    app.config["DEBUG"] = settings.debug

    setup_logging()

    CORS(app, origins=settings.allowed_origins)

    Limiter(
        app=app,
        key_func=get_remote_address,
        default_limits=[f"{settings.rate_limit_per_minute} per minute"],
    )

    swagger_config = {
        "headers": [],
        "specs": [
            {
                "endpoint": "apispec_1",
                "route": "/apispec_1.json",
                "rule_filter": lambda rule: True,
                "model_filter": lambda tag: True,
            }
        ],
        "static_url_path": "/flasgger_static",
        "swagger_ui": True,
        "specs_route": "/docs",
    }

    swagger_template = {
        "swagger": "2.0",
        "info": {
            "title": "fourmode API",
            "description": "Simulation, design and detection of complete population transfer "
            "in four-mode coupled systems",
            "version": __version__,
        },
        "basePath": "/",
        "schemes": ["http"] if settings.environment == "development" else ["https"],
        "produces": ["application/json"],
        "consumes": ["application/json"],
    }

    Swagger(app, config=swagger_config, template=swagger_template)

    tool_server = get_tool_server()

    @app.route("/health")
    def health_check():
        """Health check endpoint.
        ---
        tags:
          - System
        responses:
          200:
            description: Service health status
            schema:
              type: object
              properties:
                status:
                  type: string
                  example: "healthy"
                version:
                  type: string
                  example: "0.1.0"
                environment:
                  type: string
                  example: "development"
        """
        return jsonify(
            {"status": "healthy", "version": __version__, "environment": settings.environment}
        )

    @app.route("/tools")
    def list_tools():
        """List all available tools.
        ---
        tags:
          - Tools
        responses:
          200:
            description: Tool names, descriptions and input schemas
        """
        return jsonify(tool_server.list_tools())

    @app.route("/tools/<tool_name>/schema")
    def tool_schema(tool_name: str):
        """Input and output schema of one tool.
        ---
        tags:
          - Tools
        parameters:
          - name: tool_name
            in: path
            type: string
            required: true
            enum: ["simulate", "design", "detect", "triples", "optimize"]
        responses:
          200:
            description: JSON schemas
          404:
            description: Unknown tool
        """
        if tool_name not in tool_server.tools:
            return jsonify({"error": f"Tool '{tool_name}' not found"}), 404
        return jsonify(tool_server.get_tool_schema(tool_name))

    @app.route("/tools/<tool_name>", methods=["POST"])
    def call_tool(tool_name: str):
        """Run a tool on a JSON body.
        ---
        tags:
          - Tools
        parameters:
          - name: tool_name
            in: path
            type: string
            required: true
            enum: ["simulate", "design", "detect", "triples", "optimize"]
          - name: body
            in: body
            required: true
            schema:
              type: object
              example:
                couplings: {"v12": 5.0, "v23": 3.0, "v34": 4.0}
        responses:
          200:
            description: Tool output
          400:
            description: Invalid input
            schema:
              type: object
              properties:
                error:
                  type: string
                  example: "p,q must be odd and coprime"
          404:
            description: Unknown tool
          500:
            description: Numerical failure
        """
        if tool_name not in tool_server.tools:
            return jsonify({"error": f"Tool '{tool_name}' not found"}), 404

        data = request.get_json(silent=True)
        if not isinstance(data, dict):
            return jsonify({"error": "JSON object body required"}), 400

        try:
            result = tool_server.call_tool(tool_name, data)
            return jsonify(result.model_dump(mode="json"))
        except ValueError as e:
            return jsonify({"error": str(e)}), 400
        except Exception as e:
            logger.error(f"Error in {tool_name}: {e}")
            return jsonify({"error": str(e)}), 500

    @app.errorhandler(404)
    def not_found(error):
        return jsonify({"error": "Endpoint not found"}), 404

    @app.errorhandler(405)
    def method_not_allowed(error):
        return jsonify({"error": "Method not allowed"}), 405

    @app.errorhandler(429)
    def rate_limit_exceeded(error):
        return jsonify({"error": "Rate limit exceeded"}), 429

    @app.errorhandler(500)
    def internal_error(error):
        logger.error(f"Internal server error: {error}")
        return jsonify({"error": "Internal server error"}), 500

    logger.info("Flask application created successfully")
    return app
